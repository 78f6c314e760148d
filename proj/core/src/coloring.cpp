#include "reconf/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "reconf/cliques.hpp"

namespace reconf {

namespace {

// DSATUR greedy: color the vertex with the most distinctly-colored
// neighbors first. Gives the upper bound and the fallback witness.
Coloring dsatur_greedy(const Graph& g) {
    int n = g.vertex_count();
    Coloring out;
    out.colors.assign(n, -1);
    for (int step = 0; step < n; ++step) {
        int pick = -1, best_sat = -1, best_deg = -1;
        for (int u = 0; u < n; ++u) {
            if (out.colors[u] >= 0) continue;
            std::uint64_t seen = 0;
            for (int v : g.neighbors(u))
                if (out.colors[v] >= 0) seen |= std::uint64_t{1} << std::min(out.colors[v], 63);
            int sat = std::popcount(seen);
            int deg = g.degree(u);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = u, best_sat = sat, best_deg = deg;
            }
        }
        std::vector<char> blocked(n, 0);
        for (int v : g.neighbors(pick))
            if (out.colors[v] >= 0) blocked[out.colors[v]] = 1;
        int c = 0;
        while (blocked[c]) ++c;
        out.colors[pick] = c;
        out.chi = std::max(out.chi, c + 1);
    }
    return out;
}

// Decides k-colorability by DSATUR-ordered branch and bound. A maximum
// clique is precolored with distinct colors, which is valid up to color
// permutation and prunes most of the symmetric search space.
struct KColorSearch {
    const Graph& g;
    int k;
    std::vector<int> colors;

    bool run(const std::vector<int>& clique) {
        colors.assign(g.vertex_count(), -1);
        if (static_cast<int>(clique.size()) > k) return false;
        int c = 0;
        for (int v : clique) colors[v] = c++;
        return descend(static_cast<int>(clique.size()), c);
    }

    bool descend(int colored, int used) {
        int n = g.vertex_count();
        if (colored == n) return true;
        int pick = -1, best_sat = -1, best_deg = -1;
        std::uint64_t pick_mask = 0;
        for (int u = 0; u < n; ++u) {
            if (colors[u] >= 0) continue;
            std::uint64_t mask = 0;
            for (int v : g.neighbors(u))
                if (colors[v] >= 0) mask |= std::uint64_t{1} << colors[v];
            int sat = std::popcount(mask);
            int deg = g.degree(u);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                pick = u, best_sat = sat, best_deg = deg, pick_mask = mask;
            }
        }
        int limit = std::min(k, used + 1);  // first use of a fresh color is canonical
        for (int c = 0; c < limit; ++c) {
            if ((pick_mask >> c) & 1) continue;
            colors[pick] = c;
            if (descend(colored + 1, std::max(used, c + 1))) return true;
            colors[pick] = -1;
        }
        return false;
    }
};

}  // namespace

Coloring chromatic_number(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return {};
    if (g.edge_count() == 0) return {1, std::vector<int>(n, 0)};

    std::vector<int> best_clique;
    for (const auto& c : maximal_cliques(g))
        if (c.size() > static_cast<int>(best_clique.size())) best_clique = c.members();
    int lb = static_cast<int>(best_clique.size());

    Coloring greedy = dsatur_greedy(g);
    if (greedy.chi == lb) return greedy;
    if (greedy.chi > 64) throw ValidationError("instance too large for exact coloring");

    for (int k = lb; k < greedy.chi; ++k) {
        KColorSearch search{g, k, {}};
        if (search.run(best_clique)) return {k, std::move(search.colors)};
    }
    return greedy;
}

bool coloring_proper(const Graph& g, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

}  // namespace reconf
