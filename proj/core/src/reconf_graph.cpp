#include "reconf/reconf_graph.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace reconf {

namespace {

// Two k-cliques adjacent under TJ intersect in exactly k-1 vertices, so
// they meet in exactly one (k-1)-subset bucket; joining within buckets
// finds every edge once without an all-pairs scan.
void link_by_shared_subsets(const Graph& base, const std::vector<Clique>& labels, Graph& out,
                            bool require_base_edge) {
    std::map<std::vector<int>, std::vector<int>> buckets;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        const auto& m = labels[i].members();
        for (std::size_t drop = 0; drop < m.size(); ++drop) {
            std::vector<int> sub;
            sub.reserve(m.size() - 1);
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != drop) sub.push_back(m[j]);
            buckets[std::move(sub)].push_back(i);
        }
    }
    for (const auto& [sub, nodes] : buckets) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                if (require_base_edge) {
                    // the two vertices not in the shared subset must be adjacent
                    int u = -1, v = -1;
                    for (int x : labels[nodes[i]].members())
                        if (!std::ranges::binary_search(sub, x)) u = x;
                    for (int x : labels[nodes[j]].members())
                        if (!std::ranges::binary_search(sub, x)) v = x;
                    if (!base.adjacent(u, v)) continue;
                }
                out.add_edge(nodes[i], nodes[j]);
            }
        }
    }
}

LabeledReconfGraph build_slide_or_jump(const Graph& g, int k, RuleTag tag) {
    if (k < 1) throw ValidationError("TS/TJ require k >= 1");
    LabeledReconfGraph r{g, Rule{tag, k}, Graph{}, enumerate_k_cliques(g, k)};
    r.graph = Graph(static_cast<int>(r.labels.size()));
    for (int i = 0; i < r.graph.vertex_count(); ++i) r.graph.set_name(i, r.node_name(i));
    link_by_shared_subsets(g, r.labels, r.graph, tag == RuleTag::TS);
    return r;
}

LabeledReconfGraph build_tar(const Graph& g, int lo, int hi, Rule rule) {
    std::vector<Clique> labels;
    int omega = clique_number(g);
    for (int s = std::max(lo, 0); s <= std::min(hi, omega); ++s) {
        auto level = enumerate_k_cliques(g, s);
        labels.insert(labels.end(), level.begin(), level.end());
    }
    LabeledReconfGraph r{g, rule, Graph(static_cast<int>(labels.size())), std::move(labels)};
    for (int i = 0; i < r.graph.vertex_count(); ++i) r.graph.set_name(i, r.node_name(i));

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(r.labels.size()); ++i) index[r.labels[i].members()] = i;
    for (int i = 0; i < static_cast<int>(r.labels.size()); ++i) {
        const auto& m = r.labels[i].members();
        for (std::size_t drop = 0; drop < m.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != drop) sub.push_back(m[j]);
            if (auto it = index.find(sub); it != index.end()) r.graph.add_edge(i, it->second);
        }
    }
    return r;
}

std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= n - (k - static_cast<int>(cur.size())); ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::string bitstring(unsigned value, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if (value >> (n - 1 - i) & 1u) s[i] = '1';
    return s;
}

}  // namespace

std::string rule_name(RuleTag tag) {
    switch (tag) {
        case RuleTag::TS: return "ts";
        case RuleTag::TJ: return "tj";
        case RuleTag::TarLower: return "tar-lower";
        case RuleTag::TarUpper: return "tar-upper";
    }
    return "?";
}

std::string LabeledReconfGraph::node_name(int i) const {
    const auto& m = labels[i].members();
    if (m.empty()) return "{}";
    std::string s;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (j) s += '+';
        s += base.name(m[j]);
    }
    return s;
}

LabeledReconfGraph build_ts(const Graph& g, int k) { return build_slide_or_jump(g, k, RuleTag::TS); }
LabeledReconfGraph build_tj(const Graph& g, int k) { return build_slide_or_jump(g, k, RuleTag::TJ); }

LabeledReconfGraph build_tar_lower(const Graph& g, int k) {
    if (k < 0) throw ValidationError("TAR requires k >= 0");
    return build_tar(g, k, g.vertex_count(), Rule{RuleTag::TarLower, k});
}

LabeledReconfGraph build_tar_upper(const Graph& g, int k) {
    if (k < 0) throw ValidationError("TAR requires k >= 0");
    return build_tar(g, 0, k, Rule{RuleTag::TarUpper, k});
}

LabeledReconfGraph build_simplex(const Graph& g) { return build_tar_lower(g, 0); }

LabeledReconfGraph token_graph(const Graph& g, int k) {
    int n = g.vertex_count();
    if (k < 1 || k > n) throw ValidationError("token graph requires 1 <= k <= |V|");
    auto subsets = combinations(n, k);
    // Tokens need not induce a clique, so labels are validated against the
    // complete graph on the same vertex set.
    Graph host = Graph::complete(n);
    for (int v = 0; v < n; ++v) host.set_name(v, g.name(v));

    LabeledReconfGraph r{g, Rule{RuleTag::TS, k}, Graph(static_cast<int>(subsets.size())), {}};
    r.labels.reserve(subsets.size());
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        index[subsets[i]] = i;
        r.labels.emplace_back(host, subsets[i]);
    }
    for (int i = 0; i < static_cast<int>(r.labels.size()); ++i) r.graph.set_name(i, r.node_name(i));
    for (int i = 0; i < static_cast<int>(subsets.size()); ++i) {
        for (int u : subsets[i]) {
            for (int v : g.neighbors(u)) {
                if (std::ranges::binary_search(subsets[i], v)) continue;
                std::vector<int> moved;
                for (int x : subsets[i])
                    if (x != u) moved.push_back(x);
                moved.insert(std::ranges::lower_bound(moved, v), v);
                int j = index.at(moved);
                if (j > i) r.graph.add_edge(i, j);
            }
        }
    }
    return r;
}

Graph johnson(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw ValidationError("johnson requires 0 <= k <= n");
    auto subsets = combinations(n, k);
    Graph g(static_cast<int>(subsets.size()));
    for (int i = 0; i < g.vertex_count(); ++i) {
        std::string s;
        for (std::size_t j = 0; j < subsets[i].size(); ++j) {
            if (j) s += '+';
            s += std::to_string(subsets[i][j]);
        }
        g.set_name(i, s.empty() ? "{}" : s);
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j) {
            std::vector<int> inter;
            std::ranges::set_intersection(subsets[i], subsets[j], std::back_inserter(inter));
            if (static_cast<int>(inter.size()) == k - 1) g.add_edge(i, j);
        }
    return g;
}

Graph hypercube(int n) {
    if (n < 0 || n > 24) throw ValidationError("hypercube dimension out of range");
    Graph g(1 << n);
    for (unsigned v = 0; v < (1u << n); ++v) g.set_name(static_cast<int>(v), bitstring(v, n));
    for (unsigned v = 0; v < (1u << n); ++v)
        for (int b = 0; b < n; ++b)
            if (!(v >> b & 1u)) g.add_edge(static_cast<int>(v), static_cast<int>(v | (1u << b)));
    return g;
}

Graph gear(int n) {
    if (n < 3) throw ValidationError("gear graph requires n >= 3");
    // hub = 0; rim 1..2n with odd indices on the spokes
    Graph g(2 * n + 1);
    g.set_name(0, "hub");
    for (int i = 1; i <= 2 * n; i += 2) g.add_edge(0, i);
    for (int i = 1; i <= 2 * n; ++i) g.add_edge(i, i == 2 * n ? 1 : i + 1);
    return g;
}

Graph fibonacci_cube(int n) {
    if (n < 0 || n > 24) throw ValidationError("fibonacci cube dimension out of range");
    std::vector<unsigned> nodes;
    for (unsigned v = 0; v < (1u << n); ++v)
        if (!(v & (v >> 1))) nodes.push_back(v);
    Graph g(static_cast<int>(nodes.size()));
    std::map<unsigned, int> index;
    for (int i = 0; i < g.vertex_count(); ++i) {
        index[nodes[i]] = i;
        g.set_name(i, bitstring(nodes[i], n));
    }
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int b = 0; b < n; ++b) {
            unsigned other = nodes[i] ^ (1u << b);
            if (auto it = index.find(other); it != index.end() && it->second > i) g.add_edge(i, it->second);
        }
    return g;
}

bool reconf_graph_consistent(const LabeledReconfGraph& r) {
    int n = r.graph.vertex_count();
    if (static_cast<int>(r.labels.size()) != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.labels[i] == r.labels[j]) return false;

    auto size_ok = [&](int s) {
        switch (r.rule.tag) {
            case RuleTag::TS:
            case RuleTag::TJ: return s == r.rule.k;
            case RuleTag::TarLower: return s >= r.rule.k;
            case RuleTag::TarUpper: return s <= r.rule.k;
        }
        return false;
    };
    for (const auto& c : r.labels)
        if (!size_ok(c.size())) return false;

    auto predicate = [&](const Clique& a, const Clique& b) {
        std::vector<int> only_a, only_b;
        std::ranges::set_difference(a.members(), b.members(), std::back_inserter(only_a));
        std::ranges::set_difference(b.members(), a.members(), std::back_inserter(only_b));
        switch (r.rule.tag) {
            case RuleTag::TS:
                return only_a.size() == 1 && only_b.size() == 1 && r.base.adjacent(only_a[0], only_b[0]);
            case RuleTag::TJ: return only_a.size() == 1 && only_b.size() == 1;
            case RuleTag::TarLower:
            case RuleTag::TarUpper: return only_a.size() + only_b.size() == 1;
        }
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (r.graph.adjacent(i, j) != predicate(r.labels[i], r.labels[j])) return false;
    return true;
}

}  // namespace reconf
