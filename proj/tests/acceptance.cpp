// Full acceptance gate. Each criterion prints exactly one pass/fail line;
// the process exits nonzero if any criterion fails.

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "reconf/analysis.hpp"
#include "reconf/coloring.hpp"
#include "reconf/corpus.hpp"
#include "reconf/isomorphism.hpp"
#include "reconf/planarity.hpp"
#include "reconf/reconstruct.hpp"

using namespace reconf;

namespace {

constexpr std::uint64_t kSeed = 20240601;

int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail = {}) {
    std::printf("criterion %2d: %s  %s%s%s\n", id, ok ? "PASS" : "FAIL", what,
                detail.empty() ? "" : " — ", detail.c_str());
    if (!ok) ++failures;
}

// 200 seeded graphs with |V| <= 8 (40 each of n = 4..8).
std::vector<Graph> small_corpus() {
    std::vector<Graph> out;
    for (int n = 4; n <= 8; ++n)
        for (auto& g : generate_corpus(Family::RandomGnp, n, 40, kSeed + n)) out.push_back(std::move(g));
    return out;
}

// independent exhaustive coloring oracle: backtracking over raw assignments
bool colorable(const Graph& g, int c, std::vector<int>& colors, int v) {
    if (v == g.vertex_count()) return true;
    for (int col = 0; col < c; ++col) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (g.adjacent(u, v) && colors[u] == col) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v] = col;
        if (colorable(g, c, colors, v + 1)) return true;
    }
    return false;
}

int oracle_chi(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int c = 1;; ++c) {
        std::vector<int> colors(g.vertex_count(), -1);
        if (colorable(g, c, colors, 0)) return c;
    }
}

int& johnson_chi(int n, int k) {
    static std::map<std::pair<int, int>, int> memo;
    auto [it, fresh] = memo.try_emplace({n, k}, 0);
    if (fresh) it->second = chromatic_number(johnson(n, k)).chi;
    return it->second;
}

void criterion_1(const std::vector<Graph>& corpus) {
    int checked = 0;
    for (const auto& g : corpus)
        for (int k = 1; k <= clique_number(g) + 1; ++k) {
            if (!verify_omega_formula(g, k).pass) {
                report(1, "omega(TS_k) three-case formula", false,
                       "k=" + std::to_string(k) + " on a corpus graph");
                return;
            }
            ++checked;
        }
    report(1, "omega(TS_k) three-case formula", true,
           std::to_string(checked) + " (graph,k) pairs over 200 graphs");
}

void criterion_2() {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k) {
            Graph kn = Graph::complete(n);
            bool ok = is_isomorphic(build_ts(kn, k).graph, johnson(n, k)).has_value() &&
                      is_isomorphic(token_graph(kn, k).graph, johnson(n, k)).has_value();
            if (!ok) {
                report(2, "TS_k(K_n) = F_k(K_n) = J(n,k)", false,
                       "n=" + std::to_string(n) + " k=" + std::to_string(k));
                return;
            }
        }
    report(2, "TS_k(K_n) = F_k(K_n) = J(n,k)", true, "all 1 <= k <= n <= 5");
}

void criterion_3() {
    int checked = 0;
    for (int n = 4; n <= 7; ++n)
        for (const auto& g : generate_corpus(Family::RandomGnp, n, 10, kSeed + 100 + n)) {
            int omega = clique_number(g);
            int chi_g = chromatic_number(g).chi;
            for (int k = 1; k <= std::min(3, omega); ++k) {
                int exact = chromatic_number(build_ts(g, k).graph).chi;
                if (!(johnson_chi(omega, k) <= exact && exact <= johnson_chi(chi_g, k))) {
                    report(3, "chromatic sandwich", false, "violated at k=" + std::to_string(k));
                    return;
                }
                ++checked;
            }
        }
    report(3, "chromatic sandwich", true, std::to_string(checked) + " instances, |V| <= 7, k <= 3");
}

void criterion_4(const std::vector<Graph>& corpus) {
    for (const auto& g : corpus) {
        int omega = clique_number(g);
        if (omega < 1) continue;
        auto tj = build_tj(g, omega);
        if (has_induced_diamond(tj.graph).has_value() || !verify_tj_triangle_intersections(tj).pass) {
            report(4, "TJ_omega diamond-free + triangle intersections", false);
            return;
        }
    }
    report(4, "TJ_omega diamond-free + triangle intersections", true, "200 graphs, exhaustive scans");
}

void criteria_5_6(const std::vector<Graph>& corpus) {
    int rounds = 0;
    bool round_trip = true, msets_ok = true;
    for (const auto& g : corpus) {
        int k = clique_number(g);
        if (k < 2) continue;
        if (!verify_reconstruction(g).pass) round_trip = false;

        auto t = build_tj(g, k);
        auto part = partition_neighbors(t.graph, k);
        auto* p = std::get_if<NeighborPartition>(&part);
        if (p == nullptr) {
            round_trip = false;
            break;
        }
        if (!msets_violation(t.graph, k, build_msets(t.graph, k, *p)).empty()) msets_ok = false;
        ++rounds;
        if (!round_trip || !msets_ok) break;
    }
    report(5, "reconstruction round-trip H + cK_1 = TS_{k-1}(g)", round_trip,
           std::to_string(rounds) + " graphs with omega >= 2");
    report(6, "Msets conditions (a)-(d)", msets_ok);
}

void criteria_7_8_9() {
    auto planar = generate_corpus(Family::Planar, 12, 100, kSeed + 777);
    bool ts_ok = true, bounds_ok = true, tj4_ok = true;
    for (const auto& g : planar) {
        for (int k = 1; k <= 4 && ts_ok; ++k)
            if (!ts_planarity_check(g, k).pass) ts_ok = false;
        if (g.vertex_count() >= 3 && !triangle_bounds_check(g).pass) bounds_ok = false;
        if (!tj4_structure_check(g).pass) tj4_ok = false;
    }
    report(7, "TS_k planarity, k in 1..4", ts_ok, "100 planar graphs, |V| <= 12");

    auto k4 = triangle_bounds_check(Graph::complete(4));
    bool tight = k4.pass && k4.values["margin_f3_edges"] == 0 && k4.values["margin_f3_vertices"] == 0 &&
                 count_k3(Graph::complete(4)) == 4;
    report(8, "counting bounds F_3, F_4 (K_4 tight)", bounds_ok && tight);
    report(9, "TJ_4 acyclic with max degree <= 4", tj4_ok);
}

void criterion_10() {
    std::string why;
    bool ok = true;
    for (int n = 1; n <= 5 && ok; ++n)
        if (!is_isomorphic(build_simplex(Graph::complete(n)).graph, hypercube(n)).has_value())
            ok = false, why = "TAR(K_" + std::to_string(n) + ") != Q_" + std::to_string(n);
    for (int n = 4; n <= 8 && ok; ++n) {
        auto t = build_simplex(Graph::cycle(n));
        if (t.graph.vertex_count() != 2 * n + 1 || t.graph.edge_count() != 3 * n ||
            !is_isomorphic(t.graph, gear(n)).has_value())
            ok = false, why = "TAR(C_" + std::to_string(n) + ") != gear";
    }
    for (int n = 1; n <= 8 && ok; ++n)
        if (!is_isomorphic(build_simplex(complement(Graph::path(n))).graph, fibonacci_cube(n))
                 .has_value())
            ok = false, why = "TAR(~P_" + std::to_string(n) + ") != Gamma_" + std::to_string(n);

    std::vector<Graph> parts = {Graph::complete(1), Graph::complete(2), Graph::complete(3),
                                Graph::path(3), Graph(2)};
    for (const auto& g : parts)
        for (const auto& h : parts) {
            if (!ok) break;
            auto joined = build_simplex(join(g, h)).graph;
            auto product = cartesian_product(build_simplex(g).graph, build_simplex(h).graph);
            if (!is_isomorphic(joined, product).has_value()) ok = false, why = "TAR(g+h) != TAR(g) x TAR(h)";
        }

    for (const auto& g : generate_corpus(Family::RandomGnp, 6, 15, kSeed + 6)) {
        if (!ok) break;
        auto t = build_simplex(g).graph;
        if (!is_median_graph(t) || !is_bipartite(t)) ok = false, why = "simplex graph not median/bipartite";
    }
    report(10, "simplex graph suite (Q_n, gear, Fibonacci cube, products, median)", ok, why);
}

void criterion_11(const std::vector<Graph>& corpus) {
    for (const auto& g : corpus) {
        int n = g.vertex_count();

        // cliques against the all-subsets oracle
        for (int k = 0; k <= n; ++k) {
            std::size_t naive = 0;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                int size = 0;
                bool clique = true;
                for (int v = 0; v < n && clique; ++v) {
                    if (!(mask >> v & 1)) continue;
                    ++size;
                    for (int u = 0; u < v; ++u)
                        if ((mask >> u & 1) && !g.adjacent(u, v)) {
                            clique = false;
                            break;
                        }
                }
                if (clique && size == k) ++naive;
            }
            if (enumerate_k_cliques(g, k).size() != naive) {
                report(11, "oracle equivalence (cliques, coloring, medians)", false, "cliques");
                return;
            }
        }

        if (chromatic_number(g).chi != oracle_chi(g)) {
            report(11, "oracle equivalence (cliques, coloring, medians)", false, "coloring");
            return;
        }

        // medians against an independent Floyd-Warshall distance table
        std::vector<std::vector<int>> d(n, std::vector<int>(n, 1 << 20));
        for (int v = 0; v < n; ++v) d[v][v] = 0;
        for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
        for (int m = 0; m < n; ++m)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b)
                for (int c = b; c < n; ++c) {
                    if (d[a][b] >= 1 << 20 || d[b][c] >= 1 << 20 || d[a][c] >= 1 << 20) continue;
                    std::vector<int> want;
                    for (int m = 0; m < n; ++m)
                        if (d[a][m] + d[m][b] == d[a][b] && d[b][m] + d[m][c] == d[b][c] &&
                            d[a][m] + d[m][c] == d[a][c])
                            want.push_back(m);
                    if (medians(g, a, b, c) != want) {
                        report(11, "oracle equivalence (cliques, coloring, medians)", false, "medians");
                        return;
                    }
                }
    }
    report(11, "oracle equivalence (cliques, coloring, medians)", true, "200 graphs, |V| <= 8");
}

}  // namespace

int main() {
    std::printf("acceptance corpus seed: %llu\n", static_cast<unsigned long long>(kSeed));
    auto corpus = small_corpus();
    criterion_1(corpus);
    criterion_2();
    criterion_3();
    criterion_4(corpus);
    criteria_5_6(corpus);
    criteria_7_8_9();
    criterion_10();
    criterion_11(corpus);
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES detected");
    return failures == 0 ? 0 : 1;
}
