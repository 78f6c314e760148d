#include "reconf/planarity.hpp"

#include <cassert>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace reconf {

bool is_planar(const Graph& g) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>>;
    BoostGraph bg(g.vertex_count());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    bool planar = boost::boyer_myrvold_planarity_test(bg);
#ifndef NDEBUG
    if (planar && g.vertex_count() >= 3)
        assert(g.edge_count() <= 3 * g.vertex_count() - 6);
#endif
    return planar;
}

}  // namespace reconf
