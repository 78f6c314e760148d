#include "reconf/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <sstream>

namespace reconf {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw ValidationError("negative vertex count");
    row_.assign(static_cast<std::size_t>(n_) * words_, 0);
    names_.resize(n_);
    for (int v = 0; v < n_; ++v) names_[v] = std::to_string(v);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw ValidationError("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loop on vertex " + names_[u]);
    if (adjacent(u, v)) return;
    row_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    row_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++edge_count_;
}

int Graph::add_vertex(std::string name) {
    int words_needed = (n_ + 1 + 63) / 64;
    if (words_needed != words_) {
        std::vector<std::uint64_t> grown(static_cast<std::size_t>(n_ + 1) * words_needed, 0);
        for (int u = 0; u < n_; ++u)
            std::copy_n(row_.data() + static_cast<std::size_t>(u) * words_, words_,
                        grown.data() + static_cast<std::size_t>(u) * words_needed);
        row_ = std::move(grown);
        words_ = words_needed;
    } else {
        row_.resize(static_cast<std::size_t>(n_ + 1) * words_, 0);
    }
    names_.push_back(name.empty() ? std::to_string(n_) : std::move(name));
    return n_++;
}

int Graph::degree(int u) const {
    check_vertex(u);
    int d = 0;
    for (auto w : row(u)) d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int u) const {
    check_vertex(u);
    std::vector<int> out;
    auto r = row(u);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::bfs_distances(int src) const {
    check_vertex(src);
    std::vector<int> dist(n_, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = bfs_distances(0);
    return std::ranges::none_of(dist, [](int d) { return d < 0; });
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool first_content = true;
    std::optional<int> declared;
    std::map<std::string, int> index;
    Graph g;
    std::vector<std::pair<int, int>> pending;

    auto intern = [&](const std::string& name) {
        auto [it, fresh] = index.try_emplace(name, g.vertex_count());
        if (fresh) g.add_vertex(name);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;

        if (first_content && tokens.size() == 2 && tokens[0] == "n") {
            std::size_t pos = 0;
            int count = 0;
            try {
                count = std::stoi(tokens[1], &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos == tokens[1].size() && count >= 0) {
                declared = count;
                first_content = false;
                continue;
            }
        }
        first_content = false;

        if (tokens.size() != 2)
            throw ParseError(lineno, "expected two vertex names, got " + std::to_string(tokens.size()) + " tokens");
        if (tokens[0] == tokens[1])
            throw ValidationError("line " + std::to_string(lineno) + ": self-loop on vertex '" +
                                  tokens[0] + "'");
        int u = intern(tokens[0]);
        int v = intern(tokens[1]);
        g.add_edge(u, v);
    }

    if (declared) {
        if (*declared < g.vertex_count())
            throw ValidationError("declared vertex count " + std::to_string(*declared) +
                                  " smaller than number of named vertices");
        while (g.vertex_count() < *declared) g.add_vertex();
    }
    return g;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
    return out.str();
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph out(n);
    for (int v = 0; v < n; ++v) out.set_name(v, g.name(v));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (int v = 0; v < ng; ++v) out.set_name(v, "L." + g.name(v));
    for (int v = 0; v < nh; ++v) out.set_name(ng + v, "R." + h.name(v));
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng * nh);
    auto id = [&](int a, int x) { return a * nh + x; };
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) out.set_name(id(a, x), "(" + g.name(a) + "," + h.name(x) + ")");
    for (auto [a, b] : g.edges())
        for (int x = 0; x < nh; ++x) out.add_edge(id(a, x), id(b, x));
    for (auto [x, y] : h.edges())
        for (int a = 0; a < ng; ++a) out.add_edge(id(a, x), id(a, y));
    return out;
}

Graph add_isolated(const Graph& g, int c) {
    if (c < 0) throw ValidationError("negative isolated-vertex count");
    Graph out = g;
    for (int i = 0; i < c; ++i) out.add_vertex("iso." + std::to_string(i));
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    Graph out(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) out.set_name(static_cast<int>(i), g.name(verts[i]));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

bool is_bipartite(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = side[u] ^ 1;
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_acyclic(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (v == parent[u]) continue;
                if (parent[v] != -2) return false;
                parent[v] = u;
                stack.push_back(v);
            }
        }
    }
    return true;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u) best = std::max(best, g.degree(u));
    return best;
}

std::vector<int> medians(const Graph& g, int a, int b, int c) {
    auto da = g.bfs_distances(a);
    auto db = g.bfs_distances(b);
    auto dc = g.bfs_distances(c);
    if (da[b] < 0 || da[c] < 0 || db[c] < 0)
        throw ValidationError("median query spans multiple components");
    std::vector<int> out;
    for (int m = 0; m < g.vertex_count(); ++m) {
        if (da[m] < 0) continue;
        if (da[m] + db[m] == da[b] && db[m] + dc[m] == db[c] && da[m] + dc[m] == da[c])
            out.push_back(m);
    }
    return out;
}

bool is_median_graph(const Graph& g) {
    if (!g.is_connected()) throw ValidationError("median-graph test requires a connected graph");
    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) dist[v] = g.bfs_distances(v);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            for (int c = b; c < n; ++c) {
                int found = 0;
                for (int m = 0; m < n; ++m) {
                    if (dist[a][m] + dist[m][b] == dist[a][b] && dist[b][m] + dist[m][c] == dist[b][c] &&
                        dist[a][m] + dist[m][c] == dist[a][c] && ++found > 1)
                        break;
                }
                if (found != 1) return false;
            }
    return true;
}

}  // namespace reconf
