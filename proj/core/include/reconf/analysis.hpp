#pragma once

#include <array>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "reconf/reconf_graph.hpp"

namespace reconf {

/// Machine-readable verifier outcome. `values` holds the numbers the
/// check compared; `witness` names the violating vertices when it failed.
struct Report {
    std::string theorem;
    bool pass = true;
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json witness;  // null unless failed

    nlohmann::ordered_json to_json() const;
};

/// A complete subgraph of TS_k expressed as either all (k+1)-subsets of a
/// common clique Uni, or all one-vertex extensions of a common core Int.
struct CliqueDecomposition {
    enum class Kind { Uni, Int } kind;
    std::vector<int> core;         // size k+1 for Uni, k-1 for Int
    std::vector<int> attachments;  // a_i per input clique
};

/// Decomposes n >= 3 pairwise TS-adjacent k-cliques of g. Int is preferred
/// when both forms exist; a failure of both forms is an internal error.
CliqueDecomposition decompose_ts_clique(const Graph& g, const std::vector<Clique>& nodes, int k);

/// omega(TS_k(g)) against the three-case formula.
Report verify_omega_formula(const Graph& g, int k);

struct Sandwich {
    int lower = 0, exact = 0, upper = 0;
};

/// chi(J(omega(g),k)) <= chi(TS_k(g)) <= chi(J(chi(g),k)).
Sandwich chromatic_sandwich(const Graph& g, int k);

/// Induced K_4 - e witness, or nullopt. Edge-pair scan: two nonadjacent
/// common neighbors of an edge.
std::optional<std::array<int, 4>> has_induced_diamond(const Graph& g);

/// Every triangle of a TJ_omega graph has equal pairwise label
/// intersections.
Report verify_tj_triangle_intersections(const LabeledReconfGraph& t);

/// AB in E(TS_{k-1}(g)) iff the union of A and B is a k-clique, over all
/// (k-1)-clique pairs whose union has size k.
Report verify_ts_tj_vertex_edge_duality(const Graph& g, int k);

/// F_3 <= |E|-2 (when F_3 >= 1), 2 F_4 <= F_3 - 2 (when F_4 >= 1), and
/// F_3 <= 3|V|-8 (when F_3 >= 1 and |V| >= 3) for planar g.
Report triangle_bounds_check(const Graph& g);

/// TJ_4(g) acyclic with maximum degree <= 4 for planar g.
Report tj4_structure_check(const Graph& g);

/// TS_k(g) planar for planar g and k in 1..4.
Report ts_planarity_check(const Graph& g, int k);

}  // namespace reconf
