#include "reconf/corpus.hpp"

#include <array>
#include <random>

namespace reconf {

namespace {

// mt19937_64 consumed directly (no distributions) so the stream is
// identical across standard libraries.
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::uint64_t next() { return engine(); }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool coin(double p) { return static_cast<double>(next() >> 11) * 0x1.0p-53 < p; }
};

Graph random_gnp(int n, Rng& rng, double p) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin(p)) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, Rng& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, rng.below(v));
    return g;
}

Graph random_bipartite(int n, Rng& rng, double p) {
    Graph g(n);
    int left = (n + 1) / 2;
    for (int u = 0; u < left; ++u)
        for (int v = left; v < n; ++v)
            if (rng.coin(p)) g.add_edge(u, v);
    return g;
}

// Stacked triangulation: each new vertex subdivides a random triangular
// face, keeping the graph maximal planar throughout. Random deletions
// afterwards cannot break planarity.
Graph random_planar(int n, Rng& rng, double keep) {
    Graph full(n);
    std::vector<std::array<int, 3>> faces;
    if (n >= 2) full.add_edge(0, 1);
    if (n >= 3) {
        full.add_edge(1, 2);
        full.add_edge(0, 2);
        faces.push_back({0, 1, 2});
        faces.push_back({0, 1, 2});  // both sides of the starting triangle
    }
    for (int v = 3; v < n; ++v) {
        int idx = rng.below(static_cast<int>(faces.size()));
        auto face = faces[idx];
        for (int corner : face) full.add_edge(v, corner);
        faces[idx] = {face[0], face[1], v};  // the split face is gone
        faces.push_back({face[0], face[2], v});
        faces.push_back({face[1], face[2], v});
    }
    Graph g(n);
    for (auto [u, v] : full.edges())
        if (rng.coin(keep)) g.add_edge(u, v);
    return g;
}

}  // namespace

Family family_from_name(const std::string& name) {
    if (name == "random-gnp") return Family::RandomGnp;
    if (name == "planar") return Family::Planar;
    if (name == "bipartite") return Family::Bipartite;
    if (name == "trees") return Family::Trees;
    throw ValidationError("unknown corpus family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::RandomGnp: return "random-gnp";
        case Family::Planar: return "planar";
        case Family::Bipartite: return "bipartite";
        case Family::Trees: return "trees";
    }
    return "?";
}

std::vector<Graph> generate_corpus(Family f, int n, int count, std::uint64_t seed,
                                   double edge_probability) {
    if (n < 1) throw ValidationError("corpus graphs need n >= 1");
    if (count < 0) throw ValidationError("negative corpus count");
    std::vector<Graph> out;
    out.reserve(count);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        switch (f) {
            case Family::RandomGnp: out.push_back(random_gnp(n, rng, edge_probability)); break;
            case Family::Planar: out.push_back(random_planar(n, rng, 0.8)); break;
            case Family::Bipartite: out.push_back(random_bipartite(n, rng, edge_probability)); break;
            case Family::Trees: out.push_back(random_tree(n, rng)); break;
        }
    }
    return out;
}

}  // namespace reconf
