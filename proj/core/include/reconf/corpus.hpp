#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

enum class Family { RandomGnp, Planar, Bipartite, Trees };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// Deterministic pseudo-random graphs: same (family, n, count, seed)
/// always yields byte-identical graphs. The planar family builds a random
/// stacked triangulation and then deletes random edges, so planarity holds
/// by construction.
std::vector<Graph> generate_corpus(Family f, int n, int count, std::uint64_t seed,
                                   double edge_probability = 0.5);

}  // namespace reconf
