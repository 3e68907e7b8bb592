#pragma once
// Undirected positively weighted graph with dense node ids. Immutable once
// built; adjacency lists are sorted by neighbor id so traversal order (and
// therefore every float accumulation downstream) is deterministic.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

namespace triframes {

using NodeId = std::uint32_t;

struct Neighbor {
    NodeId node = 0;
    double weight = 0.0;

    bool operator==(const Neighbor& other) const {
        return node == other.node && weight == other.weight;
    }
};

class WeightedGraph {
public:
    WeightedGraph() = default;

    std::size_t node_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    // Neighbors in ascending node-id order. Throws on an unknown node.
    std::span<const Neighbor> neighbors(NodeId node) const;

    std::size_t degree(NodeId node) const { return neighbors(node).size(); }

    std::optional<double> edge_weight(NodeId u, NodeId v) const;

    // Edges as (u, v, w) with u < v, ordered by (u, v).
    std::vector<std::tuple<NodeId, NodeId, double>> edges() const;

private:
    friend class GraphBuilder;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
};

// Collects edges and produces an immutable graph. Self-loops and
// non-positive weights are rejected; duplicate pairs keep the maximum weight.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t node_count) : node_count_(node_count) {}

    void add_edge(NodeId u, NodeId v, double weight);
    std::size_t node_count() const { return node_count_; }

    WeightedGraph build() &&;

private:
    std::size_t node_count_;
    std::vector<std::tuple<NodeId, NodeId, double>> edges_;  // canonical u < v
};

// Edge list TSV: "u \t v \t w" with u < v, one line per edge.
void write_edge_list_tsv(std::ostream& out, const WeightedGraph& g);

}  // namespace triframes
