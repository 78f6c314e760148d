#include "reconf/analysis.hpp"

#include <algorithm>

#include "reconf/coloring.hpp"
#include "reconf/planarity.hpp"

namespace reconf {

namespace {

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::ranges::set_intersection(a, b, std::back_inserter(out));
    return out;
}

bool ts_adjacent(const Graph& g, const Clique& a, const Clique& b) {
    std::vector<int> only_a, only_b;
    std::ranges::set_difference(a.members(), b.members(), std::back_inserter(only_a));
    std::ranges::set_difference(b.members(), a.members(), std::back_inserter(only_b));
    return only_a.size() == 1 && only_b.size() == 1 && g.adjacent(only_a[0], only_b[0]);
}

}  // namespace

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["pass"] = pass;
    j["values"] = values;
    if (!witness.is_null()) j["witness"] = witness;
    return j;
}

CliqueDecomposition decompose_ts_clique(const Graph& g, const std::vector<Clique>& nodes, int k) {
    int n = static_cast<int>(nodes.size());
    if (n < 3) throw ValidationError("decomposition needs at least 3 cliques");
    for (const auto& c : nodes)
        if (c.size() != k) throw ValidationError("decomposition input clique has wrong size");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!ts_adjacent(g, nodes[i], nodes[j]))
                throw ValidationError("decomposition input cliques are not pairwise TS-adjacent");

    // Int: the common intersection of all cliques, of size k-1.
    std::vector<int> core = nodes[0].members();
    for (int i = 1; i < n; ++i) core = set_intersection(core, nodes[i].members());
    if (static_cast<int>(core.size()) == k - 1) {
        std::vector<int> attachments;
        for (const auto& c : nodes) {
            std::vector<int> extra;
            std::ranges::set_difference(c.members(), core, std::back_inserter(extra));
            attachments.push_back(extra.at(0));
        }
        return {CliqueDecomposition::Kind::Int, std::move(core), std::move(attachments)};
    }

    // Uni: the union of all cliques, of size k+1 and itself a clique.
    std::vector<int> uni = nodes[0].members();
    for (int i = 1; i < n; ++i) {
        std::vector<int> merged;
        std::ranges::set_union(uni, nodes[i].members(), std::back_inserter(merged));
        uni = std::move(merged);
    }
    if (static_cast<int>(uni.size()) == k + 1) {
        (void)Clique(g, uni);  // throws if the union is not a clique
        std::vector<int> attachments;
        for (const auto& c : nodes) {
            std::vector<int> missing;
            std::ranges::set_difference(uni, c.members(), std::back_inserter(missing));
            attachments.push_back(missing.at(0));
        }
        return {CliqueDecomposition::Kind::Uni, std::move(uni), std::move(attachments)};
    }

    throw std::logic_error("neither Uni nor Int decomposition exists; builder or input is broken");
}

Report verify_omega_formula(const Graph& g, int k) {
    Report r{.theorem = "omega-formula"};
    int omega_g = clique_number(g);
    auto ts = build_ts(g, k);
    int actual = ts.graph.vertex_count() == 0 ? 0 : clique_number(ts.graph);
    int expected = k > omega_g ? 0 : k == omega_g ? 1 : std::max(k + 1, omega_g - k + 1);
    r.values = {{"k", k}, {"omega_g", omega_g}, {"omega_ts", actual}, {"expected", expected}};
    r.pass = actual == expected;
    return r;
}

Sandwich chromatic_sandwich(const Graph& g, int k) {
    Sandwich s;
    s.lower = chromatic_number(johnson(clique_number(g), k)).chi;
    s.exact = chromatic_number(build_ts(g, k).graph).chi;
    s.upper = chromatic_number(johnson(chromatic_number(g).chi, k)).chi;
    if (!(s.lower <= s.exact && s.exact <= s.upper))
        throw std::logic_error("chromatic sandwich violated");
    return s;
}

std::optional<std::array<int, 4>> has_induced_diamond(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        std::vector<int> common;
        for (int w : g.neighbors(u))
            if (w != v && g.adjacent(v, w)) common.push_back(w);
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (!g.adjacent(common[i], common[j]))
                    return std::array<int, 4>{common[i], u, v, common[j]};  // missing edge joins the ends
    }
    return std::nullopt;
}

Report verify_tj_triangle_intersections(const LabeledReconfGraph& t) {
    if (t.rule.tag != RuleTag::TJ) throw ValidationError("triangle-intersection check expects a TJ graph");
    if (t.rule.k != clique_number(t.base))
        throw ValidationError("triangle-intersection check expects k = omega(base)");
    Report r{.theorem = "tj-triangle-intersections"};
    auto triangles = enumerate_k_cliques(t.graph, 3);
    r.values["triangles"] = triangles.size();
    for (const auto& tri : triangles) {
        auto [a, b, c] = std::tuple{tri.members()[0], tri.members()[1], tri.members()[2]};
        auto ab = set_intersection(t.labels[a].members(), t.labels[b].members());
        auto bc = set_intersection(t.labels[b].members(), t.labels[c].members());
        auto ac = set_intersection(t.labels[a].members(), t.labels[c].members());
        if (ab != bc || bc != ac) {
            r.pass = false;
            r.witness = {{"triangle", {t.node_name(a), t.node_name(b), t.node_name(c)}}};
            return r;
        }
    }
    return r;
}

Report verify_ts_tj_vertex_edge_duality(const Graph& g, int k) {
    if (k < 2 || k > clique_number(g))
        throw ValidationError("duality check requires 2 <= k <= omega(g)");
    Report r{.theorem = "ts-tj-duality"};
    auto ts = build_ts(g, k - 1);
    auto tj_nodes = enumerate_k_cliques(g, k);
    std::vector<std::vector<int>> tj_sets;
    for (const auto& c : tj_nodes) tj_sets.push_back(c.members());
    std::ranges::sort(tj_sets);

    long long checked = 0;
    for (int i = 0; i < ts.graph.vertex_count(); ++i) {
        for (int j = i + 1; j < ts.graph.vertex_count(); ++j) {
            std::vector<int> uni;
            std::ranges::set_union(ts.labels[i].members(), ts.labels[j].members(), std::back_inserter(uni));
            if (static_cast<int>(uni.size()) != k) continue;  // duality says nothing here
            ++checked;
            bool edge = ts.graph.adjacent(i, j);
            bool node = std::ranges::binary_search(tj_sets, uni);
            if (edge != node) {
                r.pass = false;
                r.witness = {{"a", ts.node_name(i)}, {"b", ts.node_name(j)},
                             {"ts_edge", edge}, {"tj_node", node}};
                return r;
            }
        }
    }
    r.values["pairs_checked"] = checked;
    return r;
}

Report triangle_bounds_check(const Graph& g) {
    if (!is_planar(g)) throw ValidationError("triangle bounds require a planar graph");
    if (g.vertex_count() < 3) throw ValidationError("triangle bounds require |V| >= 3");
    Report r{.theorem = "triangle-bounds"};
    auto f3 = count_k3(g);
    auto f4 = count_k4(g);
    long long e = g.edge_count(), v = g.vertex_count();
    r.values = {{"f3", f3}, {"f4", f4}, {"edges", e}, {"vertices", v}};

    // Each bound is derived from the planarity of a nonempty TS graph, so it
    // only applies once that graph has vertices: F_3 >= 1 for the TS_2-based
    // bounds, F_4 >= 1 for the TS_3-based one.
    if (f3 >= 1 && f3 > e - 2) {
        r.pass = false;
        r.witness = {{"violated", "f3 <= |E|-2"}};
    }
    if (f4 >= 1 && 2 * f4 > f3 - 2) {
        r.pass = false;
        r.witness = {{"violated", "2*f4 <= f3-2"}};
    }
    if (f3 >= 1 && f3 > 3 * v - 8) {
        r.pass = false;
        r.witness = {{"violated", "f3 <= 3|V|-8"}};
    }
    r.values["margin_f3_edges"] = f3 >= 1 ? (e - 2) - f3 : 0;
    r.values["margin_f3_vertices"] = f3 >= 1 ? (3 * v - 8) - f3 : 0;
    return r;
}

Report tj4_structure_check(const Graph& g) {
    if (!is_planar(g)) throw ValidationError("TJ_4 structure check requires a planar graph");
    Report r{.theorem = "tj4-structure"};
    auto tj = build_tj(g, 4);
    bool acyclic = is_acyclic(tj.graph);
    int deg = max_degree(tj.graph);
    r.values = {{"nodes", tj.graph.vertex_count()}, {"acyclic", acyclic}, {"max_degree", deg}};
    r.pass = acyclic && deg <= 4;
    return r;
}

Report ts_planarity_check(const Graph& g, int k) {
    if (!is_planar(g)) throw ValidationError("TS planarity check requires a planar graph");
    if (k < 1 || k > 4) throw ValidationError("TS planarity check requires 1 <= k <= 4");
    Report r{.theorem = "ts-planar"};
    auto ts = build_ts(g, k);
    r.values = {{"k", k}, {"nodes", ts.graph.vertex_count()}, {"edges", ts.graph.edge_count()}};
    r.pass = is_planar(ts.graph);
    return r;
}

}  // namespace reconf
