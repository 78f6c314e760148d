#pragma once

#include <string>
#include <vector>

#include "reconf/cliques.hpp"
#include "reconf/graph.hpp"

namespace reconf {

enum class RuleTag { TS, TJ, TarLower, TarUpper };

struct Rule {
    RuleTag tag;
    int k = 0;  // clique size for TS/TJ, size threshold for TAR
};

std::string rule_name(RuleTag tag);

/// A reconfiguration graph together with the base graph, the rule that
/// generated it, and the clique labelling of its nodes. Node order equals
/// clique enumeration order.
struct LabeledReconfGraph {
    Graph base;
    Rule rule;
    Graph graph;
    std::vector<Clique> labels;

    /// Display name of a node: its members joined by '+', or "{}".
    std::string node_name(int i) const;
};

/// Nodes are the size-k cliques; C ~ C' iff they exchange one token along
/// an edge of the base graph.
LabeledReconfGraph build_ts(const Graph& g, int k);

/// As build_ts but the moved token may jump to any unoccupied vertex.
LabeledReconfGraph build_tj(const Graph& g, int k);

/// Cliques of size >= k (resp. <= k); edges add or remove a single token
/// while both endpoints respect the bound.
LabeledReconfGraph build_tar_lower(const Graph& g, int k);
LabeledReconfGraph build_tar_upper(const Graph& g, int k);

/// The simplex graph: TAR over all cliques including the empty one.
LabeledReconfGraph build_simplex(const Graph& g);

/// Token graph F_k: all size-k vertex subsets (cliques not required) with
/// the TS adjacency.
LabeledReconfGraph token_graph(const Graph& g, int k);

// Named families.
Graph johnson(int n, int k);
Graph hypercube(int n);
Graph gear(int n);
Graph fibonacci_cube(int n);

/// Checks the LabeledReconfGraph invariants by brute force (test helper):
/// distinct labels, sizes per rule, and edge iff rule predicate.
bool reconf_graph_consistent(const LabeledReconfGraph& r);

}  // namespace reconf
