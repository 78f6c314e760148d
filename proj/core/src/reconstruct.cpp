#include "reconf/reconstruct.hpp"

#include <algorithm>
#include <numeric>

#include "reconf/isomorphism.hpp"

namespace reconf {

namespace {

std::vector<int> with_vertex(const std::vector<int>& set, int u) {
    std::vector<int> out = set;
    out.insert(std::ranges::lower_bound(out, u), u);
    return out;
}

bool is_clique_in(const Graph& t, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (!t.adjacent(set[i], set[j])) return false;
    return true;
}

}  // namespace

bool NeighborPartition::valid_for(const Graph& t) const {
    if (static_cast<int>(sets.size()) != t.vertex_count()) return false;
    for (int u = 0; u < t.vertex_count(); ++u) {
        if (static_cast<int>(sets[u].size()) != k) return false;
        std::vector<int> all;
        for (const auto& s : sets[u]) {
            if (!is_clique_in(t, s)) return false;
            for (int x : s) {
                if (!t.adjacent(u, x)) return false;
                all.push_back(x);
            }
        }
        std::ranges::sort(all);
        if (std::ranges::adjacent_find(all) != all.end()) return false;  // overlap
        if (static_cast<int>(all.size()) != t.degree(u)) return false;   // not a cover
        for (std::size_t i = 0; i < sets[u].size(); ++i)
            for (std::size_t j = i + 1; j < sets[u].size(); ++j)
                for (int a : sets[u][i])
                    for (int b : sets[u][j])
                        if (t.adjacent(a, b)) return false;  // cross edge
    }
    return true;
}

nlohmann::ordered_json NotKGood::to_json(const Graph& t) const {
    nlohmann::ordered_json j;
    j["vertex"] = vertex >= 0 ? t.name(vertex) : "?";
    switch (reason) {
        case Reason::NonCliqueSet: j["reason"] = "set-not-a-clique"; break;
        case Reason::CrossEdgeToRemain: j["reason"] = "edge-between-sets"; break;
        case Reason::RemainNonempty: j["reason"] = "more-than-k-components"; break;
    }
    auto arr = nlohmann::ordered_json::array();
    for (int v : witness) arr.push_back(t.name(v));
    j["witness"] = arr;
    return j;
}

PartitionResult partition_neighbors(const Graph& t, int k) {
    if (k < 1) throw ValidationError("k-goodness requires k >= 1");
    NeighborPartition p{k, {}};
    p.sets.assign(t.vertex_count(), std::vector<std::vector<int>>(k));
    for (int u = 0; u < t.vertex_count(); ++u) {
        std::vector<int> remain = t.neighbors(u);  // sorted
        for (int i = 0; i < k && !remain.empty(); ++i) {
            int pivot = remain.front();
            std::vector<int> chosen, rest;
            for (int x : remain)
                (x == pivot || t.adjacent(x, pivot) ? chosen : rest).push_back(x);
            for (std::size_t a = 0; a < chosen.size(); ++a)
                for (std::size_t b = a + 1; b < chosen.size(); ++b)
                    if (!t.adjacent(chosen[a], chosen[b]))
                        return NotKGood{u, NotKGood::Reason::NonCliqueSet, {chosen[a], chosen[b]}};
            for (int a : chosen)
                for (int b : rest)
                    if (t.adjacent(a, b))
                        return NotKGood{u, NotKGood::Reason::CrossEdgeToRemain, {a, b}};
            p.sets[u][i] = std::move(chosen);
            remain = std::move(rest);
        }
        if (!remain.empty())
            return NotKGood{u, NotKGood::Reason::RemainNonempty, {remain.front()}};
    }
    return p;
}

void Msets::insert(std::vector<int> set) {
    if (set.empty()) throw ValidationError("empty set in Msets");
    if (set.size() == 1) {
        ++counts_[std::move(set)];
    } else {
        counts_.try_emplace(std::move(set), 1);
    }
}

int Msets::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0,
                           [](int acc, const auto& kv) { return acc + kv.second; });
}

Msets build_msets(const Graph& t, int k, const NeighborPartition& p) {
    Msets m;
    for (int u = 0; u < t.vertex_count(); ++u)
        for (int i = 0; i < k; ++i) m.insert(with_vertex(p.sets[u][i], u));
    if (auto bad = msets_violation(t, k, m); !bad.empty())
        throw std::logic_error("Msets condition (" + bad + ") violated; partition was invalid");
    return m;
}

std::string msets_violation(const Graph& t, int k, const Msets& m) {
    const auto& counts = m.counts();
    // (a) distinct sets share at most one node
    for (auto it = counts.begin(); it != counts.end(); ++it)
        for (auto jt = std::next(it); jt != counts.end(); ++jt) {
            std::vector<int> inter;
            std::ranges::set_intersection(it->first, jt->first, std::back_inserter(inter));
            if (inter.size() >= 2) return "a";
        }
    // (b) every set is a clique
    for (const auto& [set, count] : counts)
        if (!is_clique_in(t, set)) return "b";
    // (c) every node lies in exactly k sets, counting multiplicity
    std::vector<int> cover(t.vertex_count(), 0);
    for (const auto& [set, count] : counts)
        for (int v : set) cover[v] += count;
    if (std::ranges::any_of(cover, [&](int c) { return c != k; })) return "c";
    // (d) every edge lies in exactly one set
    for (auto [u, v] : t.edges()) {
        int hits = 0;
        for (const auto& [set, count] : counts)
            if (std::ranges::binary_search(set, u) && std::ranges::binary_search(set, v)) hits += count;
        if (hits != 1) return "d";
    }
    return {};
}

Graph msets_to_graph(const Msets& m) {
    std::vector<std::pair<std::vector<int>, int>> members;  // (set, copy index)
    std::vector<std::pair<std::vector<int>, int>> ordered(m.counts().begin(), m.counts().end());
    std::ranges::sort(ordered, [](const auto& a, const auto& b) {
        return std::tuple{a.first.size(), a.first} < std::tuple{b.first.size(), b.first};
    });
    for (const auto& [set, count] : ordered)
        for (int copy = 0; copy < count; ++copy) members.emplace_back(set, copy);

    Graph g(static_cast<int>(members.size()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        std::string name;
        for (std::size_t j = 0; j < members[i].first.size(); ++j) {
            if (j) name += '+';
            name += std::to_string(members[i].first[j]);
        }
        if (members[i].second > 0) name += "#" + std::to_string(members[i].second);
        g.set_name(i, name);
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j) {
            std::vector<int> inter;
            std::ranges::set_intersection(members[i].first, members[j].first, std::back_inserter(inter));
            if (!inter.empty()) g.add_edge(i, j);
        }
    return g;
}

std::variant<Graph, NotKGood> reconstruct_ts(const Graph& t, int k) {
    if (k < 2) throw ValidationError("reconstruction requires k >= 2");
    auto part = partition_neighbors(t, k);
    if (auto* bad = std::get_if<NotKGood>(&part)) return *bad;
    return msets_to_graph(build_msets(t, k, std::get<NeighborPartition>(part)));
}

std::vector<int> expand(const LabeledReconfGraph& t, const Clique& w) {
    if (t.rule.tag != RuleTag::TJ) throw ValidationError("expand requires a TJ graph");
    int k = t.rule.k;
    if (k != clique_number(t.base)) throw ValidationError("expand requires k = omega(base)");
    if (w.size() != k - 1) throw ValidationError("expand requires |w| = k-1");
    std::vector<int> out;
    for (int i = 0; i < t.graph.vertex_count(); ++i) {
        if (std::ranges::includes(t.labels[i].members(), w.members())) out.push_back(i);
    }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (!t.graph.adjacent(out[i], out[j]))
                throw std::logic_error("Expand set is not a clique; TJ builder is broken");
    return out;
}

Msets msets_reference(const LabeledReconfGraph& t) {
    Msets m;
    for (const auto& w : enumerate_k_cliques(t.base, t.rule.k - 1)) {
        auto e = expand(t, w);
        if (!e.empty()) m.insert(std::move(e));
    }
    return m;
}

Report verify_reconstruction(const Graph& g) {
    int k = clique_number(g);
    if (k < 2) throw ValidationError("reconstruction round-trip requires omega(g) >= 2");
    Report r{.theorem = "reconstruction"};
    r.values["k"] = k;

    auto t = build_tj(g, k);
    auto part = partition_neighbors(t.graph, k);
    if (auto* bad = std::get_if<NotKGood>(&part)) {
        r.pass = false;
        r.witness = bad->to_json(t.graph);
        return r;
    }
    auto msets = build_msets(t.graph, k, std::get<NeighborPartition>(part));
    Graph h = msets_to_graph(msets);

    int c = 0;
    for (const auto& w : enumerate_k_cliques(g, k - 1))
        if (expand(t, w).empty()) ++c;

    auto ts = build_ts(g, k - 1);
    r.values["c"] = c;
    r.values["h_nodes"] = h.vertex_count();
    r.values["ts_nodes"] = ts.graph.vertex_count();

    if (msets != msets_reference(t)) {
        r.pass = false;
        r.witness = {{"violated", "msets != reference"}};
        return r;
    }
    if (!is_isomorphic(add_isolated(h, c), ts.graph)) {
        r.pass = false;
        r.witness = {{"violated", "H + cK1 not isomorphic to TS_{k-1}(g)"}};
    }
    return r;
}

Graph join_lift(const Graph& g, int n) {
    int omega = clique_number(g);
    if (n < omega) throw ValidationError("join lift requires n >= omega(g)");
    if (n == omega) return g;
    return join(g, Graph::complete(n - omega));
}

}  // namespace reconf
