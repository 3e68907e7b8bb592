#pragma once
// Chinese Whispers: randomized label propagation. Every node starts in its
// own cluster; nodes are visited in a fresh seeded permutation each sweep and
// adopt the label with the largest total edge weight among their neighbors,
// updating in place. Converges when a sweep changes nothing; max_iters caps
// the run since the process has no termination guarantee in general.

#include <cstdint>
#include <optional>

#include "triframes/clustering.hpp"
#include "triframes/graph.hpp"

namespace triframes {

struct CwParams {
    int max_iters = 20;
    std::uint64_t seed = 0;
};

// The label maximizing summed edge weight to `node`, smallest label on ties;
// empty for an isolated node.
std::optional<NodeId> dominant_label(const WeightedGraph& g, const std::vector<NodeId>& labels,
                                     NodeId node);

HardClustering chinese_whispers(const WeightedGraph& g, const CwParams& params = {});

}  // namespace triframes
