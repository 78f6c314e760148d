#pragma once

#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

struct Coloring {
    int chi = 0;
    std::vector<int> colors;  // proper coloring with values 0..chi-1
};

/// Exact chromatic number via DSATUR-seeded branch and bound, with a
/// maximum-clique lower bound and clique precoloring for symmetry breaking.
/// chi(empty graph) = 0; chi(edgeless nonempty graph) = 1.
Coloring chromatic_number(const Graph& g);

bool coloring_proper(const Graph& g, const std::vector<int>& colors);

}  // namespace reconf
