#pragma once
// Shared clustering containers and their TSV / text serializations.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "triframes/graph.hpp"

namespace triframes {

// Clusters as node-id sets: members ascending, clusters ordered by smallest
// member. A hard clustering partitions the nodes; a fuzzy one merely covers
// them (a node may appear in several clusters, once per cluster at most).
using Clusters = std::vector<std::vector<NodeId>>;

struct HardClustering {
    std::vector<NodeId> labels;  // node -> cluster label

    std::size_t cluster_count() const;
    Clusters clusters() const;
};

struct FuzzyClustering {
    Clusters clusters;
};

// One cluster per node / one cluster holding every node.
HardClustering singleton_clustering(std::size_t node_count);
HardClustering whole_clustering(std::size_t node_count);

// TSV: "cluster_id \t node_id". Fuzzy clusterings repeat node ids across
// clusters. Cluster ids are dense and zero-based.
void write_clusters_tsv(std::ostream& out, const Clusters& clusters);

// Reads the TSV back; clusters ordered by ascending cluster id, members
// deduplicated and sorted.
Clusters read_clusters_tsv(std::istream& in);

// Human-readable: one cluster per line, members space-separated.
void write_clusters_text(std::ostream& out, const Clusters& clusters);

}  // namespace triframes
