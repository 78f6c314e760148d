#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace reconf {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph over dense vertex indices 0..n-1.
/// Adjacency is stored as one bitset row per vertex; rows stay symmetric
/// and irreflexive. Original string names are kept for display only.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const {
        return (row_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    void add_edge(int u, int v);
    int add_vertex(std::string name = {});

    int degree(int u) const;
    std::vector<int> neighbors(int u) const;
    std::span<const std::uint64_t> row(int u) const {
        return {row_.data() + static_cast<std::size_t>(u) * words_, static_cast<std::size_t>(words_)};
    }
    int words() const { return words_; }

    const std::string& name(int v) const { return names_[v]; }
    void set_name(int v, std::string name) { names_[v] = std::move(name); }

    /// Edges as (u,v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// BFS distances from src; -1 for unreachable vertices.
    std::vector<int> bfs_distances(int src) const;
    bool is_connected() const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> row_;
    std::vector<std::string> names_;
};

/// Parses whitespace-separated "u v" name pairs, one edge per line.
/// Lines starting with '#' and blank lines are ignored. An optional leading
/// "n <count>" line declares the total vertex count (extra vertices are
/// isolated and named by index). Duplicate edges collapse; self-loops are
/// rejected.
Graph parse_edge_list(const std::string& text);

std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);
Graph add_isolated(const Graph& g, int c);

/// Induced subgraph on the given (sorted or unsorted) vertex set.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

bool is_bipartite(const Graph& g);
bool is_acyclic(const Graph& g);
int max_degree(const Graph& g);

/// Vertices lying on shortest paths between each pair of a, b, c.
/// Throws ValidationError if the three vertices span multiple components.
std::vector<int> medians(const Graph& g, int a, int b, int c);

/// True iff every vertex triple has exactly one median. Requires a
/// connected graph.
bool is_median_graph(const Graph& g);

}  // namespace reconf
