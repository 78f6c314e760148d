#pragma once

#include <map>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "reconf/analysis.hpp"
#include "reconf/reconf_graph.hpp"

namespace reconf {

/// Per-node partition of the neighborhood into at most k cliques with no
/// cross edges.
struct NeighborPartition {
    int k = 0;
    std::vector<std::vector<std::vector<int>>> sets;  // sets[u][i], each sorted

    bool valid_for(const Graph& t) const;
};

/// The vertex and failure branch that stopped the k-good check.
struct NotKGood {
    enum class Reason { NonCliqueSet, CrossEdgeToRemain, RemainNonempty };
    int vertex = -1;
    Reason reason = Reason::RemainNonempty;
    std::vector<int> witness;  // the offending vertex pair, when applicable

    nlohmann::ordered_json to_json(const Graph& t) const;
};

using PartitionResult = std::variant<NeighborPartition, NotKGood>;

/// Greedy k-goodness check; the pivot is always the lowest-index vertex of
/// the remaining neighborhood, so the partition is deterministic.
PartitionResult partition_neighbors(const Graph& t, int k);

/// Multiset of node subsets: singletons carry explicit multiplicity, sets
/// of size >= 2 occur at most once.
class Msets {
public:
    /// Always count singletons; insert larger sets only when absent.
    void insert(std::vector<int> set);

    const std::map<std::vector<int>, int>& counts() const { return counts_; }
    int total() const;

    friend bool operator==(const Msets&, const Msets&) = default;

private:
    std::map<std::vector<int>, int> counts_;
};

/// Builds the multiset M_i(u) = S_i(u) + u and validates conditions
/// (a)-(d); a validation failure is an internal error, not an input error.
Msets build_msets(const Graph& t, int k, const NeighborPartition& p);

/// Returns the violated condition ("a".."d") or empty when all hold.
std::string msets_violation(const Graph& t, int k, const Msets& m);

/// One node per multiset member (copies distinct), adjacent iff the sets
/// intersect. Node order: (size, content, copy index).
Graph msets_to_graph(const Msets& m);

/// Full pipeline on an unlabeled candidate TJ_k graph.
std::variant<Graph, NotKGood> reconstruct_ts(const Graph& t, int k);

/// Node indices of t whose clique label contains the (k-1)-clique w.
/// Requires t = build_tj(base, omega(base)).
std::vector<int> expand(const LabeledReconfGraph& t, const Clique& w);

/// The multiset of nonempty Expand(w) over all (k-1)-cliques w of the base.
Msets msets_reference(const LabeledReconfGraph& t);

/// End-to-end check: H + cK_1 isomorphic to TS_{omega-1}(g), with c counted
/// from empty Expand sets, and the algorithmic Msets equal to the reference.
Report verify_reconstruction(const Graph& g);

/// g joined with K_{n - omega(g)}; preserves TJ_omega up to isomorphism.
Graph join_lift(const Graph& g, int n);

}  // namespace reconf
