#include "triframes/clustering.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "triframes/text_io.hpp"

namespace triframes {

std::size_t HardClustering::cluster_count() const {
    std::vector<NodeId> distinct(labels);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return distinct.size();
}

Clusters HardClustering::clusters() const {
    std::map<NodeId, std::vector<NodeId>> by_label;
    for (NodeId node = 0; node < labels.size(); ++node) by_label[labels[node]].push_back(node);
    Clusters out;
    out.reserve(by_label.size());
    for (auto& [label, members] : by_label) out.push_back(std::move(members));
    // Members are already ascending; order clusters by smallest member.
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

HardClustering singleton_clustering(std::size_t node_count) {
    if (node_count == 0) throw std::invalid_argument("empty node set");
    HardClustering clustering;
    clustering.labels.resize(node_count);
    std::iota(clustering.labels.begin(), clustering.labels.end(), NodeId{0});
    return clustering;
}

HardClustering whole_clustering(std::size_t node_count) {
    if (node_count == 0) throw std::invalid_argument("empty node set");
    HardClustering clustering;
    clustering.labels.assign(node_count, 0);
    return clustering;
}

void write_clusters_tsv(std::ostream& out, const Clusters& clusters) {
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (NodeId node : clusters[c]) out << c << '\t' << node << '\n';
}

Clusters read_clusters_tsv(std::istream& in) {
    std::map<long long, std::vector<NodeId>> by_id;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        const std::string where = "clustering line " + std::to_string(line_no);
        if (fields.size() != 2) throw std::runtime_error(where + ": expected 2 fields");
        long long cluster = parse_int(fields[0], where);
        long long node = parse_int(fields[1], where);
        if (node < 0) throw std::runtime_error(where + ": negative node id");
        by_id[cluster].push_back(static_cast<NodeId>(node));
    }
    Clusters out;
    out.reserve(by_id.size());
    for (auto& [id, members] : by_id) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

void write_clusters_text(std::ostream& out, const Clusters& clusters) {
    for (const auto& cluster : clusters) {
        for (std::size_t i = 0; i < cluster.size(); ++i) {
            if (i) out << ' ';
            out << cluster[i];
        }
        out << '\n';
    }
}

}  // namespace triframes
