#pragma once

#include "reconf/graph.hpp"

namespace reconf {

/// Sound-and-complete planarity test (Boyer-Myrvold). In debug builds the
/// positive answer is cross-checked against the Euler bound |E| <= 3|V|-6.
bool is_planar(const Graph& g);

}  // namespace reconf
