#pragma once
// Orchestration behind the CLI subcommands. Every stage exchanges plain TSV
// so runs can be mixed with external tools; logging goes to stderr, data to
// files or stdout. Outputs are fully determined by (inputs, config, seed).

#include <cstdint>
#include <string>

namespace triframes {

struct PipelineConfig {
    // inputs
    std::string embeddings_path;
    std::string triples_path;
    std::string gold_path;
    std::string annotations_path;
    std::string clustering_path;  // eval input

    // outputs ("-" or empty selects stdout where noted)
    std::string clustering_out;  // induce
    std::string frames_out;      // induce (optional)
    std::string scores_out;      // eval; empty = stdout
    std::string graph_out;       // graph
    std::string nodes_out;       // graph (optional node table)
    std::string gold_out;        // gold

    std::string method = "watset";  // watset | cw | kmeans | singletons | whole
    int k = 10;                     // nearest neighbors per triple
    std::uint64_t seed = 0;
    std::size_t kmeans_k = 10000;
    double min_freq = 1.0;
    std::string mode = "all";  // eval: verb | subject | object | frame | all

    bool mutual_knn = false;
    bool normalize = false;   // unit-normalize rows before k-means
    bool lowercase = false;   // lowercase triple (and gold) words on load
    bool dedup_slot = false;  // slot modes count each distinct word once
    unsigned threads = 0;     // 0 = auto (TRIFRAMES_THREADS or hardware)
};

// Each returns 0 on success and throws std::runtime_error on failure;
// the CLI maps exceptions to a nonzero exit.
int run_induce(const PipelineConfig& config);
int run_eval(const PipelineConfig& config);
int run_gold(const PipelineConfig& config);
int run_graph(const PipelineConfig& config);

}  // namespace triframes
