#include "reconf/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace reconf {

namespace {

// Iterated refinement: a vertex's color is rewritten as (color, sorted
// multiset of neighbor colors) until the partition stabilizes. The color
// table is shared between both graphs so colors are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
    std::vector<int> ca(a.vertex_count(), 0), cb(b.vertex_count(), 0);
    int classes = 1;
    for (int round = 0; round < a.vertex_count() + 1; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        auto recolor = [&](const Graph& g, std::vector<int>& colors) {
            std::vector<int> next(colors.size());
            for (int u = 0; u < g.vertex_count(); ++u) {
                std::vector<int> sig;
                for (int v : g.neighbors(u)) sig.push_back(colors[v]);
                std::ranges::sort(sig);
                auto it = table.try_emplace({colors[u], std::move(sig)}, static_cast<int>(table.size())).first;
                next[u] = it->second;
            }
            return next;
        };
        auto na = recolor(a, ca);
        auto nb = recolor(b, cb);
        int new_classes = static_cast<int>(table.size());
        ca = std::move(na);
        cb = std::move(nb);
        if (new_classes == classes) break;
        classes = new_classes;
    }
    return {ca, cb};
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
    if (n == 0) return IsoWitness{{}};

    auto [ca, cb] = refine(a, b);
    auto sorted_a = ca, sorted_b = cb;
    std::ranges::sort(sorted_a);
    std::ranges::sort(sorted_b);
    if (sorted_a != sorted_b) return std::nullopt;

    // Order: (degree, sorted neighbor-degree multiset), ties by index.
    std::vector<std::pair<int, std::vector<int>>> key(n);
    for (int u = 0; u < n; ++u) {
        std::vector<int> nd;
        for (int v : a.neighbors(u)) nd.push_back(a.degree(v));
        std::ranges::sort(nd);
        key[u] = {a.degree(u), std::move(nd)};
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](int u, int v) { return key[u] < key[v]; });

    std::vector<int> mapping(n, -1);
    std::vector<char> used(n, 0);

    auto consistent = [&](int u, int v) {
        if (ca[u] != cb[v]) return false;
        for (int w = 0; w < n; ++w)
            if (mapping[w] >= 0 && a.adjacent(u, w) != b.adjacent(v, mapping[w])) return false;
        return true;
    };

    std::function<bool(int)> search = [&](int pos) {
        if (pos == n) return true;
        int u = order[pos];
        for (int v = 0; v < n; ++v) {
            if (used[v] || !consistent(u, v)) continue;
            mapping[u] = v;
            used[v] = 1;
            if (search(pos + 1)) return true;
            mapping[u] = -1;
            used[v] = 0;
        }
        return false;
    };

    if (!search(0)) return std::nullopt;
    return IsoWitness{std::move(mapping)};
}

bool witness_valid(const Graph& a, const Graph& b, const IsoWitness& w) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || static_cast<int>(w.mapping.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : w.mapping) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (a.adjacent(u, v) != b.adjacent(w.mapping[u], w.mapping[v])) return false;
    return true;
}

}  // namespace reconf
