#pragma once
// Small hand-built graphs shared by the clustering tests.

#include "triframes/graph.hpp"

namespace fixtures {

// Nodes 0-5: triangles {0,1,2} and {3,4,5} with unit weights, joined by a
// weak 2-3 bridge.
inline triframes::WeightedGraph bridged_triangles(double bridge_weight = 0.01) {
    triframes::GraphBuilder b(6);
    b.add_edge(0, 1, 1.0);
    b.add_edge(0, 2, 1.0);
    b.add_edge(1, 2, 1.0);
    b.add_edge(3, 4, 1.0);
    b.add_edge(3, 5, 1.0);
    b.add_edge(4, 5, 1.0);
    b.add_edge(2, 3, bridge_weight);
    return std::move(b).build();
}

// Nodes 0-4: hub 4 shared by triangles {0,1,4} and {2,3,4}; the two triangle
// halves are not connected to each other except through the hub.
inline triframes::WeightedGraph hub_triangles() {
    triframes::GraphBuilder b(5);
    b.add_edge(0, 1, 1.0);
    b.add_edge(0, 4, 1.0);
    b.add_edge(1, 4, 1.0);
    b.add_edge(2, 3, 1.0);
    b.add_edge(2, 4, 1.0);
    b.add_edge(3, 4, 1.0);
    return std::move(b).build();
}

inline triframes::WeightedGraph complete_graph(std::size_t n, double weight = 1.0) {
    triframes::GraphBuilder b(n);
    for (triframes::NodeId u = 0; u < n; ++u)
        for (triframes::NodeId v = u + 1; v < n; ++v) b.add_edge(u, v, weight);
    return std::move(b).build();
}

inline triframes::WeightedGraph edgeless_graph(std::size_t n) {
    return std::move(triframes::GraphBuilder(n)).build();
}

// Two disjoint unit triangles {0,1,2} and {3,4,5}.
inline triframes::WeightedGraph disjoint_triangles() {
    triframes::GraphBuilder b(6);
    b.add_edge(0, 1, 1.0);
    b.add_edge(0, 2, 1.0);
    b.add_edge(1, 2, 1.0);
    b.add_edge(3, 4, 1.0);
    b.add_edge(3, 5, 1.0);
    b.add_edge(4, 5, 1.0);
    return std::move(b).build();
}

}  // namespace fixtures
