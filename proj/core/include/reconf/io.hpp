#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "reconf/reconf_graph.hpp"

namespace reconf {

/// DOT with deterministic vertex order and quoted node labels.
std::string to_dot(const Graph& g);

/// { rule, k, nodes: [sorted vertex-name lists], edges: [[i,j] with i<j] },
/// byte-deterministic.
nlohmann::ordered_json reconf_to_json(const LabeledReconfGraph& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace reconf
