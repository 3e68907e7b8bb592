#include "triframes/watset.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "triframes/parallel.hpp"
#include "triframes/text_io.hpp"

namespace triframes {

namespace {

// Cosine between sparse vectors keyed by node id, both sorted by id.
double sparse_cosine(const std::vector<Neighbor>& a, double norm_a,
                     const std::vector<Neighbor>& b, double norm_b) {
    double dot = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].node < b[j].node) {
            ++i;
        } else if (a[i].node > b[j].node) {
            ++j;
        } else {
            dot += a[i].weight * b[j].weight;
            ++i;
            ++j;
        }
    }
    return dot / (norm_a * norm_b);
}

double sparse_norm(const std::vector<Neighbor>& v) {
    double sum = 0.0;
    for (const Neighbor& n : v) sum += n.weight * n.weight;
    return std::sqrt(sum);
}

// Context plus the owning node, anchored at the maximum context weight so the
// owner also counts toward the similarity of overlapping contexts.
std::vector<Neighbor> augment_context(const Sense& sense) {
    double anchor = 1.0;  // isolated senses never take part in edge mapping
    if (!sense.context.empty()) {
        anchor = sense.context.front().weight;
        for (const Neighbor& n : sense.context) anchor = std::max(anchor, n.weight);
    }
    std::vector<Neighbor> out = sense.context;
    Neighbor self{sense.node, anchor};
    auto pos = std::lower_bound(out.begin(), out.end(), self, [](const Neighbor& a, const Neighbor& b) {
        return a.node < b.node;
    });
    out.insert(pos, self);
    return out;
}

std::uint64_t edge_key(NodeId u, NodeId v) {
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

SenseInventory induce_senses(const WeightedGraph& g, const WatsetParams& params) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<Sense>> per_node(n);

    parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t u = begin; u < end; ++u) {
            auto nbrs = g.neighbors(static_cast<NodeId>(u));
            auto& senses = per_node[u];
            if (nbrs.empty()) {
                senses.push_back({static_cast<NodeId>(u), 0, {}});
                continue;
            }
            // Ego-network: subgraph induced by the neighbors, u excluded.
            // Local ids follow the (ascending) neighbor order.
            const std::size_t m = nbrs.size();
            GraphBuilder ego(m);
            for (std::size_t a = 0; a < m; ++a) {
                for (const Neighbor& nb : g.neighbors(nbrs[a].node)) {
                    if (nb.node <= nbrs[a].node) continue;  // each pair once
                    auto it = std::lower_bound(
                        nbrs.begin(), nbrs.end(), nb.node,
                        [](const Neighbor& x, NodeId id) { return x.node < id; });
                    if (it != nbrs.end() && it->node == nb.node) {
                        auto b = static_cast<NodeId>(it - nbrs.begin());
                        ego.add_edge(static_cast<NodeId>(a), b, nb.weight);
                    }
                }
            }
            WeightedGraph ego_graph = std::move(ego).build();
            CwParams local{params.max_iters, params.seed ^ static_cast<std::uint64_t>(u)};
            HardClustering local_clusters = chinese_whispers(ego_graph, local);
            for (const auto& cluster : local_clusters.clusters()) {
                Sense sense;
                sense.node = static_cast<NodeId>(u);
                sense.sense_index = static_cast<std::uint32_t>(senses.size());
                sense.context.reserve(cluster.size());
                for (NodeId local_id : cluster) sense.context.push_back(nbrs[local_id]);
                senses.push_back(std::move(sense));
            }
        }
    });

    SenseInventory inventory;
    inventory.first_of_node.resize(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u)
        inventory.first_of_node[u + 1] =
            inventory.first_of_node[u] + static_cast<std::uint32_t>(per_node[u].size());
    inventory.senses.reserve(inventory.first_of_node[n]);
    for (auto& senses : per_node)
        for (auto& sense : senses) inventory.senses.push_back(std::move(sense));
    return inventory;
}

WeightedGraph build_sense_graph(const WeightedGraph& g, const SenseInventory& inventory,
                                unsigned threads) {
    const auto& senses = inventory.senses;

    // (node, neighbor) -> global sense id of the node's sense containing it.
    std::unordered_map<std::uint64_t, std::uint32_t> sense_of;
    sense_of.reserve(2 * g.edge_count());
    for (std::uint32_t sid = 0; sid < senses.size(); ++sid)
        for (const Neighbor& member : senses[sid].context)
            sense_of.emplace(edge_key(senses[sid].node, member.node), sid);

    std::vector<std::vector<Neighbor>> augmented(senses.size());
    std::vector<double> norms(senses.size());
    parallel_for(senses.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t s = begin; s < end; ++s) {
            augmented[s] = augment_context(senses[s]);
            norms[s] = sparse_norm(augmented[s]);
        }
    });

    // One sense edge per original edge, oriented u < v: the source sense is
    // forced by u's context partition, the target sense of v is the most
    // similar candidate (smallest sense_index on ties).
    auto edges = g.edges();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> mapped(edges.size());
    parallel_for(edges.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t e = begin; e < end; ++e) {
            auto [u, v, w] = edges[e];
            auto it = sense_of.find(edge_key(u, v));
            if (it == sense_of.end())
                throw std::logic_error("sense contexts do not cover edge " + std::to_string(u) +
                                       "-" + std::to_string(v));
            std::uint32_t source = it->second;
            std::uint32_t first = inventory.first_of_node[v];
            std::uint32_t last = inventory.first_of_node[v + 1];
            std::uint32_t best = first;
            double best_sim = -2.0;
            for (std::uint32_t cand = first; cand < last; ++cand) {
                double sim =
                    sparse_cosine(augmented[source], norms[source], augmented[cand], norms[cand]);
                if (sim > best_sim) {
                    best_sim = sim;
                    best = cand;
                }
            }
            mapped[e] = {source, best};
        }
    });

    GraphBuilder builder(senses.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        builder.add_edge(mapped[e].first, mapped[e].second, std::get<2>(edges[e]));
    return std::move(builder).build();
}

WatsetResult watset(const WeightedGraph& g, const WatsetParams& params) {
    WatsetResult result;
    result.inventory = induce_senses(g, params);
    result.sense_graph = build_sense_graph(g, result.inventory, params.threads);
    HardClustering sense_clusters =
        chinese_whispers(result.sense_graph, {params.max_iters, params.seed});
    for (const auto& cluster : sense_clusters.clusters()) {
        std::vector<NodeId> nodes;
        nodes.reserve(cluster.size());
        for (NodeId sense_id : cluster) nodes.push_back(result.inventory.senses[sense_id].node);
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        result.clustering.clusters.push_back(std::move(nodes));
    }
    return result;
}

void write_sense_graph_tsv(std::ostream& out, const WeightedGraph& sense_graph,
                           const SenseInventory& inventory) {
    auto label = [&](NodeId sense_id) {
        const Sense& s = inventory.senses[sense_id];
        return std::to_string(s.node) + "#" + std::to_string(s.sense_index);
    };
    for (const auto& [a, b, w] : sense_graph.edges())
        out << label(a) << '\t' << label(b) << '\t' << format_double(w) << '\n';
}

}  // namespace triframes
