// isomorphism, planarity, coloring

#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "reconf/coloring.hpp"
#include "reconf/corpus.hpp"
#include "reconf/isomorphism.hpp"
#include "reconf/planarity.hpp"
#include "reconf/reconf_graph.hpp"

using namespace reconf;
using reconf::testing::from_edges;
using reconf::testing::octahedron;
using reconf::testing::petersen;

namespace {

// exhaustive c^n oracle
int naive_chi(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int c = 1;; ++c) {
        std::vector<int> colors(n, 0);
        for (;;) {
            bool proper = true;
            for (auto [u, v] : g.edges())
                if (colors[u] == colors[v]) {
                    proper = false;
                    break;
                }
            if (proper) return c;
            int i = n - 1;
            while (i >= 0 && colors[i] == c - 1) colors[i--] = 0;
            if (i < 0) break;
            ++colors[i];
        }
    }
}

}  // namespace

TEST_CASE("isomorphism basics") {
    Graph c4 = Graph::cycle(4);
    Graph sq = cartesian_product(Graph::complete(2), Graph::complete(2));
    auto w = is_isomorphic(c4, sq);
    REQUIRE(w.has_value());
    CHECK(witness_valid(c4, sq, *w));

    CHECK_FALSE(is_isomorphic(Graph::complete(3), Graph::path(3)).has_value());
    CHECK_FALSE(is_isomorphic(Graph::path(4), Graph::path(3)).has_value());

    // same degree sequence, different graphs
    Graph two_triangles = from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(is_isomorphic(Graph::cycle(6), two_triangles).has_value());
}

TEST_CASE("self isomorphism returns a valid witness") {
    for (const auto& g : generate_corpus(Family::RandomGnp, 7, 6, 5)) {
        auto w = is_isomorphic(g, g);
        REQUIRE(w.has_value());
        CHECK(witness_valid(g, g, *w));
    }
}

TEST_CASE("petersen is the kneser graph K(5,2)") {
    // 2-subsets of [5], adjacent iff disjoint: the complement of J(5,2)
    Graph kneser = complement(johnson(5, 2));
    auto w = is_isomorphic(petersen(), kneser);
    REQUIRE(w.has_value());
    CHECK(witness_valid(petersen(), kneser, *w));
}

TEST_CASE("planarity") {
    CHECK(is_planar(Graph::complete(4)));
    CHECK_FALSE(is_planar(Graph::complete(5)));
    Graph k33 = from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK_FALSE(is_planar(k33));
    CHECK(is_planar(octahedron()));
    CHECK(is_planar(Graph(0)));
    CHECK_FALSE(is_planar(petersen()));

    SUBCASE("euler bound on planar results") {
        for (const auto& g : generate_corpus(Family::Planar, 10, 10, 3)) {
            REQUIRE(is_planar(g));
            if (g.vertex_count() >= 3) CHECK(g.edge_count() <= 3 * g.vertex_count() - 6);
        }
    }
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(Graph(0)).chi == 0);
    CHECK(chromatic_number(from_edges(4, {})).chi == 1);
    for (int n = 1; n <= 6; ++n) CHECK(chromatic_number(Graph::complete(n)).chi == n);
    CHECK(chromatic_number(Graph::cycle(5)).chi == 3);
    CHECK(chromatic_number(petersen()).chi == 3);
    CHECK(chromatic_number(johnson(5, 2)).chi == 5);  // line graph of K_5

    SUBCASE("exposes a proper coloring") {
        Graph g = octahedron();
        auto c = chromatic_number(g);
        CHECK(c.chi == 3);
        CHECK(coloring_proper(g, c.colors));
        CHECK(*std::max_element(c.colors.begin(), c.colors.end()) == c.chi - 1);
    }
}

TEST_CASE("chromatic number matches exhaustive oracle") {
    for (const auto& g : generate_corpus(Family::RandomGnp, 7, 10, 17)) {
        auto c = chromatic_number(g);
        CHECK(c.chi == naive_chi(g));
        CHECK(coloring_proper(g, c.colors));
    }
}
