// Command-line front end: induce | eval | gold | graph.

#include <CLI11.hpp>

#include <exception>
#include <iostream>

#include "triframes/pipeline.hpp"

namespace {

void add_triple_flags(CLI::App* cmd, triframes::PipelineConfig& config) {
    cmd->add_option("--triples", config.triples_path, "SVO triple TSV (s\\tv\\to[\\tfreq])")
        ->required();
    cmd->add_option("--min-freq", config.min_freq, "drop triples lighter than this (default 1)");
    cmd->add_flag("--lowercase", config.lowercase, "lowercase words on load");
}

void add_graph_flags(CLI::App* cmd, triframes::PipelineConfig& config) {
    cmd->add_option("--embeddings", config.embeddings_path,
                    "word vectors, text word2vec format (.gz accepted)")
        ->required();
    cmd->add_option("-k,--knn", config.k, "nearest neighbors per triple (default 10)");
    cmd->add_flag("--mutual-knn", config.mutual_knn, "keep only reciprocated neighbor pairs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semantic frame induction from SVO triples"};
    app.require_subcommand(1);

    triframes::PipelineConfig config;

    CLI::App* induce = app.add_subcommand("induce", "cluster triples into frames");
    add_graph_flags(induce, config);
    add_triple_flags(induce, config);
    induce->add_option("--method", config.method,
                       "watset | cw | kmeans | singletons | whole (default watset)");
    induce->add_option("--seed", config.seed, "random seed (default 0)");
    induce->add_option("--kmeans-k", config.kmeans_k, "clusters for k-means (default 10000)");
    induce->add_flag("--normalize", config.normalize, "unit-normalize rows before k-means");
    induce->add_option("--output", config.clustering_out, "clustering TSV out")->required();
    induce->add_option("--frames", config.frames_out, "triframe dump out");
    induce->add_option("--threads", config.threads, "worker threads (0 = auto)");

    CLI::App* eval = app.add_subcommand("eval", "score a clustering against gold");
    add_triple_flags(eval, config);
    eval->add_option("--clustering", config.clustering_path, "clustering TSV in")->required();
    eval->add_option("--gold", config.gold_path, "gold TSV in")->required();
    eval->add_option("--mode", config.mode, "verb | subject | object | frame | all (default all)");
    eval->add_flag("--dedup-slot", config.dedup_slot,
                   "count each distinct word once in slot modes");
    eval->add_option("--scores", config.scores_out, "CSV out (default stdout)");

    CLI::App* gold = app.add_subcommand("gold", "build gold clusters from frame annotations");
    gold->add_option("--annotations", config.annotations_path, "annotation TSV in")->required();
    gold->add_option("--output", config.gold_out, "gold TSV out")->required();

    CLI::App* graph = app.add_subcommand("graph", "dump the k-NN triple graph");
    add_graph_flags(graph, config);
    add_triple_flags(graph, config);
    graph->add_option("--output", config.graph_out, "edge list TSV out")->required();
    graph->add_option("--nodes", config.nodes_out, "node table TSV out");
    graph->add_option("--threads", config.threads, "worker threads (0 = auto)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (induce->parsed()) return triframes::run_induce(config);
        if (eval->parsed()) return triframes::run_eval(config);
        if (gold->parsed()) return triframes::run_gold(config);
        if (graph->parsed()) return triframes::run_graph(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
