#include "triframes/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <stdexcept>

#include "triframes/chinese_whispers.hpp"
#include "triframes/clustering.hpp"
#include "triframes/embeddings.hpp"
#include "triframes/eval.hpp"
#include "triframes/frames.hpp"
#include "triframes/gold_builder.hpp"
#include "triframes/kmeans.hpp"
#include "triframes/knn.hpp"
#include "triframes/text_io.hpp"
#include "triframes/triples.hpp"
#include "triframes/watset.hpp"

namespace triframes {

namespace {

// Writes through a file or stdout ("-"); flushes and reports failures.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& writer) {
    if (path == "-") {
        writer(std::cout);
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    writer(out);
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + path);
}

std::string lowercase_ascii(std::string word) {
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return word;
}

std::vector<Triple> load_pipeline_triples(const PipelineConfig& config, TripleLoadStats* stats) {
    if (config.triples_path.empty()) throw std::runtime_error("no triples file given");
    TripleLoadOptions options;
    options.lowercase = config.lowercase;
    options.min_freq = config.min_freq;
    return load_triples_file(config.triples_path, options, stats);
}

Clusters remap_to_triple_ids(const Clusters& row_clusters,
                             const std::vector<std::size_t>& row_to_triple) {
    Clusters out;
    out.reserve(row_clusters.size());
    for (const auto& cluster : row_clusters) {
        std::vector<NodeId> ids;
        ids.reserve(cluster.size());
        for (NodeId row : cluster) ids.push_back(static_cast<NodeId>(row_to_triple[row]));
        std::sort(ids.begin(), ids.end());
        out.push_back(std::move(ids));
    }
    return out;
}

}  // namespace

int run_induce(const PipelineConfig& config) {
    if (config.embeddings_path.empty()) throw std::runtime_error("no embeddings file given");
    if (config.clustering_out.empty())
        throw std::runtime_error("no clustering output path given");

    EmbeddingModel model = load_embeddings_file(config.embeddings_path);
    std::cerr << "embeddings: " << model.size() << " words, d=" << model.dimension();
    if (model.zero_rows_skipped) std::cerr << ", skipped " << model.zero_rows_skipped << " zero rows";
    std::cerr << "\n";

    TripleLoadStats stats;
    std::vector<Triple> triples = load_pipeline_triples(config, &stats);
    std::cerr << "triples: " << stats.instances << " instances, " << stats.unique << " unique, "
              << stats.below_min_freq << " below min-freq\n";
    if (triples.empty()) throw std::runtime_error("no triples left after filtering");

    EmbeddedStore store = embed_store(model, triples, config.threads);
    std::cerr << "embedded: " << store.matrix.rows << " rows of width " << store.matrix.cols
              << ", dropped " << store.dropped.size() << " OOV triples\n";

    Clusters row_clusters;
    if (config.method == "watset" || config.method == "cw") {
        if (config.k < 1) throw std::runtime_error("k must be >= 1");
        KnnOptions knn;
        knn.k = static_cast<std::size_t>(config.k);
        knn.mutual = config.mutual_knn;
        knn.threads = config.threads;
        WeightedGraph graph = build_knn_graph(store.matrix, knn);
        std::cerr << "graph: " << graph.node_count() << " nodes, " << graph.edge_count()
                  << " edges (k=" << config.k << (config.mutual_knn ? ", mutual" : ", union")
                  << ")\n";
        if (config.method == "watset") {
            WatsetParams params;
            params.seed = config.seed;
            params.threads = config.threads;
            WatsetResult result = watset(graph, params);
            std::cerr << "watset: " << result.inventory.senses.size() << " senses\n";
            row_clusters = std::move(result.clustering.clusters);
        } else {
            row_clusters = chinese_whispers(graph, {20, config.seed}).clusters();
        }
    } else if (config.method == "kmeans") {
        Matrix rows = store.matrix;
        if (config.normalize) normalize_rows(rows);
        KMeansParams params;
        params.k = config.kmeans_k;
        params.seed = config.seed;
        params.threads = config.threads;
        KMeansResult result = kmeans(rows, params);
        std::cerr << "kmeans: converged after " << result.iterations << " iterations\n";
        row_clusters = result.clustering.clusters();
    } else if (config.method == "singletons") {
        row_clusters = singleton_clustering(store.matrix.rows).clusters();
    } else if (config.method == "whole") {
        row_clusters = whole_clustering(store.matrix.rows).clusters();
    } else {
        throw std::runtime_error("unknown method: " + config.method);
    }

    Clusters clusters = remap_to_triple_ids(row_clusters, store.row_to_triple);
    std::cerr << "clusters: " << clusters.size() << " (method=" << config.method
              << ", seed=" << config.seed << ")\n";

    write_output(config.clustering_out,
                 [&](std::ostream& out) { write_clusters_tsv(out, clusters); });
    if (!config.frames_out.empty()) {
        auto frames = aggregate_frames(triples, clusters);
        write_output(config.frames_out,
                     [&](std::ostream& out) { write_triframes(out, frames); });
    }
    return 0;
}

int run_eval(const PipelineConfig& config) {
    if (config.clustering_path.empty()) throw std::runtime_error("no clustering file given");
    if (config.gold_path.empty()) throw std::runtime_error("no gold file given");

    std::vector<Triple> triples = load_pipeline_triples(config, nullptr);

    auto clustering_in = open_input(config.clustering_path);
    Clusters clusters = read_clusters_tsv(*clustering_in);

    std::vector<std::string> bad_ids;
    for (const auto& cluster : clusters)
        for (NodeId id : cluster)
            if (id >= triples.size() && bad_ids.size() < 10)
                bad_ids.push_back(std::to_string(id));
    if (!bad_ids.empty()) {
        std::string msg = "clustering references unknown triple ids:";
        for (const auto& id : bad_ids) msg += " " + id;
        throw std::runtime_error(msg);
    }

    // Triples missing from the clustering (e.g. dropped as OOV before
    // clustering) count as unclustered: each becomes a singleton cluster.
    std::vector<std::uint8_t> assigned(triples.size(), 0);
    for (const auto& cluster : clusters)
        for (NodeId id : cluster) assigned[id] = 1;
    std::size_t implicit = 0;
    for (NodeId id = 0; id < triples.size(); ++id) {
        if (!assigned[id]) {
            clusters.push_back({id});
            ++implicit;
        }
    }
    if (implicit) std::cerr << "eval: added " << implicit << " implicit singleton clusters\n";

    GoldStandard gold = load_gold_file(config.gold_path);
    if (config.lowercase) {
        for (auto& frame : gold.frames) {
            for (auto& t : frame.triples) {
                t.subject = lowercase_ascii(t.subject);
                t.verb = lowercase_ascii(t.verb);
                t.object = lowercase_ascii(t.object);
            }
        }
    }

    // The clustering and the gold must describe the same set of triples.
    std::set<std::string> system_universe;
    for (const Triple& t : triples)
        system_universe.insert(t.subject + '\t' + t.verb + '\t' + t.object);
    std::set<std::string> gold_universe;
    for (const auto& frame : gold.frames)
        for (const auto& t : frame.triples)
            gold_universe.insert(t.subject + '\t' + t.verb + '\t' + t.object);
    std::vector<std::string> offenders;
    for (const auto& key : system_universe)
        if (!gold_universe.count(key) && offenders.size() < 10)
            offenders.push_back("system-only: " + key);
    for (const auto& key : gold_universe)
        if (!system_universe.count(key) && offenders.size() < 10)
            offenders.push_back("gold-only: " + key);
    if (!offenders.empty()) {
        std::string msg = "clustering and gold universes differ;";
        for (const auto& offender : offenders) msg += "\n  " + offender;
        throw std::runtime_error(msg);
    }

    std::vector<std::string> modes;
    if (config.mode == "all")
        modes = {"verb", "subject", "object", "frame"};
    else
        modes = {config.mode};

    EvalOptions options;
    options.dedup_slot = config.dedup_slot;
    std::vector<std::pair<std::string, Scores>> rows;
    for (const auto& name : modes) {
        EvalMode mode = parse_eval_mode(name);
        rows.emplace_back(name, evaluate(clusters, triples, gold, mode, options));
    }
    write_output(config.scores_out.empty() ? "-" : config.scores_out,
                 [&](std::ostream& out) { write_scores_csv(out, rows); });
    return 0;
}

int run_gold(const PipelineConfig& config) {
    if (config.annotations_path.empty()) throw std::runtime_error("no annotations file given");
    if (config.gold_out.empty()) throw std::runtime_error("no gold output path given");

    auto annotations = load_annotations_file(config.annotations_path);
    GoldBuildStats stats;
    GoldStandard gold = build_gold(annotations, &stats);
    std::cerr << "gold: " << stats.annotations << " annotations, " << stats.triples_emitted
              << " triple instances, " << gold.frames.size() << " frames (dropped: "
              << stats.multiword_fee_dropped << " multi-word FEE, "
              << stats.multiword_fillers_dropped << " multi-word fillers, "
              << stats.too_few_roles_dropped << " with <2 roles)\n";
    write_output(config.gold_out, [&](std::ostream& out) { write_gold(out, gold); });
    return 0;
}

int run_graph(const PipelineConfig& config) {
    if (config.embeddings_path.empty()) throw std::runtime_error("no embeddings file given");
    if (config.graph_out.empty()) throw std::runtime_error("no graph output path given");

    if (config.k < 1) throw std::runtime_error("k must be >= 1");
    EmbeddingModel model = load_embeddings_file(config.embeddings_path);
    TripleLoadStats stats;
    std::vector<Triple> triples = load_pipeline_triples(config, &stats);
    EmbeddedStore store = embed_store(model, triples, config.threads);

    KnnOptions knn;
    knn.k = static_cast<std::size_t>(config.k);
    knn.mutual = config.mutual_knn;
    knn.threads = config.threads;
    WeightedGraph graph = build_knn_graph(store.matrix, knn);
    std::cerr << "graph: " << graph.node_count() << " nodes, " << graph.edge_count()
              << " edges\n";

    write_output(config.graph_out, [&](std::ostream& out) { write_edge_list_tsv(out, graph); });
    if (!config.nodes_out.empty()) {
        write_output(config.nodes_out, [&](std::ostream& out) {
            for (std::size_t row = 0; row < store.row_to_triple.size(); ++row) {
                const Triple& t = triples[store.row_to_triple[row]];
                out << row << '\t' << t.subject << ' ' << t.verb << ' ' << t.object << '\n';
            }
        });
    }
    return 0;
}

}  // namespace triframes
