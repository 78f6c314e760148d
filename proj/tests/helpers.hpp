#pragma once

#include <initializer_list>
#include <utility>

#include "reconf/graph.hpp"

namespace reconf::testing {

inline Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// K_4 minus the edge 0-3.
inline Graph diamond() { return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

// Outer C_5, inner pentagram, spokes.
inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

// K_{2,2,2}.
inline Graph octahedron() {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v != u + 3) g.add_edge(u, v);
    return g;
}

}  // namespace reconf::testing
