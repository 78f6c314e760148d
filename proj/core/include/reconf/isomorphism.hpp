#pragma once

#include <optional>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/// Vertex bijection a -> b preserving adjacency and non-adjacency.
struct IsoWitness {
    std::vector<int> mapping;  // mapping[u in a] = v in b
};

/// Backtracking search seeded by iterated neighbor-degree refinement.
/// Intended for small graphs (|V| up to a few dozen); returns a witness
/// iff the graphs are isomorphic.
std::optional<IsoWitness> is_isomorphic(const Graph& a, const Graph& b);

/// Checks the witness invariants directly (used by tests).
bool witness_valid(const Graph& a, const Graph& b, const IsoWitness& w);

}  // namespace reconf
