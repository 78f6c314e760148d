#pragma once

#include <cstdint>
#include <vector>

#include "reconf/graph.hpp"

namespace reconf {

/// A vertex subset of a host graph, validated to be pairwise adjacent.
/// Members are kept strictly sorted so equal cliques compare equal.
class Clique {
public:
    Clique(const Graph& host, std::vector<int> members);

    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(int v) const;

    friend bool operator==(const Clique& a, const Clique& b) { return a.members_ == b.members_; }
    friend auto operator<=>(const Clique& a, const Clique& b) { return a.members_ <=> b.members_; }

private:
    std::vector<int> members_;
};

/// All size-k cliques in lexicographic member order. k=0 yields the single
/// empty clique; k=1 yields every vertex.
std::vector<Clique> enumerate_k_cliques(const Graph& g, int k);

/// Bron-Kerbosch with pivoting; every maximal clique exactly once.
std::vector<Clique> maximal_cliques(const Graph& g);

int clique_number(const Graph& g);

std::int64_t count_k3(const Graph& g);
std::int64_t count_k4(const Graph& g);

}  // namespace reconf
