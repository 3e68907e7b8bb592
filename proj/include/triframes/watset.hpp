#pragma once
// Watset fuzzy clustering.
//
// Hubs (ambiguous high-degree nodes) wreck hard clustering because all their
// edges pull into one cluster. Watset splits them first:
//
//   1. sense induction — each node's ego-network (the subgraph induced by its
//      neighbors, the node itself excluded) is clustered with Chinese
//      Whispers; every ego-cluster becomes one sense of the node, its context
//      being the cluster members weighted by their edge weight to the node;
//   2. disambiguation — each original edge is rewritten between senses: the
//      source sense is the one whose context holds the other endpoint, the
//      target sense is the candidate whose context looks most similar
//      (cosine over sparse weight vectors, each context anchored with its
//      owner node);
//   3. global clustering — Chinese Whispers on the sense graph, then every
//      sense cluster is projected back to node ids.
//
// A node ends up in as many clusters as it has senses in distinct global
// clusters, so the result is a cover, not a partition.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "triframes/chinese_whispers.hpp"
#include "triframes/clustering.hpp"
#include "triframes/graph.hpp"

namespace triframes {

struct Sense {
    NodeId node = 0;
    std::uint32_t sense_index = 0;         // 0-based within the node
    std::vector<Neighbor> context;         // sorted by node id; weight = edge to owner
};

struct SenseInventory {
    std::vector<Sense> senses;             // grouped by node, sense_index ascending
    std::vector<std::uint32_t> first_of_node;  // node -> first sense id; size n+1

    std::size_t sense_count(NodeId node) const {
        return first_of_node[node + 1] - first_of_node[node];
    }
};

struct WatsetParams {
    std::uint64_t seed = 0;
    int max_iters = 20;    // for both the ego-network and the global CW runs
    unsigned threads = 1;  // 0 = auto
};

// Step 1. Local CW runs are seeded with (seed XOR node id) so per-node
// results are decorrelated but reproducible. An isolated node gets one
// empty-context sense. Contexts of a node's senses partition its neighbors.
SenseInventory induce_senses(const WeightedGraph& g, const WatsetParams& params = {});

// Step 2. One sense edge per original edge (oriented u < v); coincident
// mappings keep the maximum weight. Node ids of the result are sense ids.
WeightedGraph build_sense_graph(const WeightedGraph& g, const SenseInventory& inventory,
                                unsigned threads = 1);

struct WatsetResult {
    FuzzyClustering clustering;
    SenseInventory inventory;
    WeightedGraph sense_graph;
};

// Steps 1-3. The global CW run uses the user seed unchanged.
WatsetResult watset(const WeightedGraph& g, const WatsetParams& params = {});

// Debug dump of a sense graph as "node#k \t node#k \t w" lines.
void write_sense_graph_tsv(std::ostream& out, const WeightedGraph& sense_graph,
                           const SenseInventory& inventory);

}  // namespace triframes
