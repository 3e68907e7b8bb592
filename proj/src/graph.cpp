#include "triframes/graph.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "triframes/text_io.hpp"

namespace triframes {

std::span<const Neighbor> WeightedGraph::neighbors(NodeId node) const {
    if (node >= adjacency_.size()) throw std::out_of_range("unknown node");
    const auto& list = adjacency_[node];
    return {list.data(), list.size()};
}

std::optional<double> WeightedGraph::edge_weight(NodeId u, NodeId v) const {
    if (u >= adjacency_.size() || v >= adjacency_.size()) throw std::out_of_range("unknown node");
    // Search the shorter adjacency list.
    const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    NodeId target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    auto it = std::lower_bound(list.begin(), list.end(), target,
                               [](const Neighbor& n, NodeId id) { return n.node < id; });
    if (it != list.end() && it->node == target) return it->weight;
    return std::nullopt;
}

std::vector<std::tuple<NodeId, NodeId, double>> WeightedGraph::edges() const {
    std::vector<std::tuple<NodeId, NodeId, double>> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (const auto& [v, w] : adjacency_[u])
            if (u < v) out.emplace_back(u, v, w);
    return out;
}

void GraphBuilder::add_edge(NodeId u, NodeId v, double weight) {
    if (u >= node_count_ || v >= node_count_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::logic_error("self-loop");
    if (!(weight > 0.0)) throw std::invalid_argument("edge weight must be positive");
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v, weight);
}

WeightedGraph GraphBuilder::build() && {
    // Duplicate pairs keep the maximum weight.
    std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
        return std::get<2>(a) > std::get<2>(b);
    });
    edges_.erase(std::unique(edges_.begin(), edges_.end(),
                             [](const auto& a, const auto& b) {
                                 return std::get<0>(a) == std::get<0>(b) &&
                                        std::get<1>(a) == std::get<1>(b);
                             }),
                 edges_.end());

    WeightedGraph g;
    g.adjacency_.resize(node_count_);
    g.edge_count_ = edges_.size();

    std::vector<std::size_t> degree(node_count_, 0);
    for (const auto& [u, v, w] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    for (NodeId n = 0; n < node_count_; ++n) g.adjacency_[n].reserve(degree[n]);
    for (const auto& [u, v, w] : edges_) {
        g.adjacency_[u].push_back({v, w});
        g.adjacency_[v].push_back({u, w});
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    return g;
}

void write_edge_list_tsv(std::ostream& out, const WeightedGraph& g) {
    for (const auto& [u, v, w] : g.edges())
        out << u << '\t' << v << '\t' << format_double(w) << '\n';
}

}  // namespace triframes
