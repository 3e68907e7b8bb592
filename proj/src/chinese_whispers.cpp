#include "triframes/chinese_whispers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "triframes/random.hpp"

namespace triframes {

std::optional<NodeId> dominant_label(const WeightedGraph& g, const std::vector<NodeId>& labels,
                                     NodeId node) {
    auto nbrs = g.neighbors(node);
    if (nbrs.empty()) return std::nullopt;
    // Neighbor order is ascending by id, so the mass sums are deterministic.
    std::map<NodeId, double> mass;
    for (const Neighbor& nb : nbrs) mass[labels[nb.node]] += nb.weight;
    NodeId best = mass.begin()->first;
    double best_mass = mass.begin()->second;
    for (const auto& [label, m] : mass) {
        if (m > best_mass) {
            best = label;
            best_mass = m;
        }
    }
    return best;
}

HardClustering chinese_whispers(const WeightedGraph& g, const CwParams& params) {
    if (params.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    const std::size_t n = g.node_count();
    HardClustering clustering;
    clustering.labels.resize(n);
    std::iota(clustering.labels.begin(), clustering.labels.end(), NodeId{0});
    if (n == 0) return clustering;

    Rng rng(params.seed);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});

    for (int iter = 0; iter < params.max_iters; ++iter) {
        deterministic_shuffle(order, rng);
        bool changed = false;
        for (NodeId node : order) {
            auto best = dominant_label(g, clustering.labels, node);
            if (best && *best != clustering.labels[node]) {
                clustering.labels[node] = *best;  // in-place: later visits see it
                changed = true;
            }
        }
        if (!changed) break;
    }
    return clustering;
}

}  // namespace triframes
