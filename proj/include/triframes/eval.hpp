#pragma once
// Clustering quality against gold clusters: normalized modified purity
// (precision-like; singleton clusters count as wrong), normalized inverse
// purity (recall-like), and their harmonic mean F1.
//
// Both measures run over weighted clusters: nmPU averages, for each system
// cluster with more than one distinct element, its best weighted overlap
// with any gold cluster, normalized by the total system weight; niPU is the
// dual with the roles of system and gold swapped, normalized by the total
// gold weight and with no singleton exclusion.
//
// Whole-frame evaluation converts each role-typed triple into its three
// (word, role) pairs and compares unions of pairs; single-slot modes project
// clusters onto one slot's words.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "triframes/clustering.hpp"
#include "triframes/triples.hpp"

namespace triframes {

// element -> weight; weights must be positive.
using WeightedCluster = std::map<std::string, double>;

// nmPU. N is the total element weight of `system`; clusters with a single
// distinct element contribute nothing. Empty system scores 0 with a warning.
double nmpu(const std::vector<WeightedCluster>& system, const std::vector<WeightedCluster>& gold);

// niPU. N is the total element weight of `gold`; overlaps are weighted from
// the gold side. Throws on empty gold.
double nipu(const std::vector<WeightedCluster>& system, const std::vector<WeightedCluster>& gold);

// Harmonic mean; 0 when either input is 0.
double f1_score(double nmpu_value, double nipu_value);

struct Scores {
    double nmpu = 0.0;
    double nipu = 0.0;
    double f1 = 0.0;
};

struct TypedTriple {
    std::string subject, role1, verb, object, role2;
    double weight = 1.0;
};

struct GoldFrame {
    std::string frame_id;
    std::vector<TypedTriple> triples;
};

struct GoldStandard {
    std::vector<GoldFrame> frames;
    double total_weight() const;
};

// Union of the typed pairs of a role-typed triple cluster: every triple
// expands to (subject, role1), (verb, "FEE"), (object, role2), weights
// summed over contributing triples. Throws on a missing role label.
WeightedCluster frame_tuples(const std::vector<TypedTriple>& cluster);

enum class EvalMode { Frame, Verb, Subject, Object };

EvalMode parse_eval_mode(const std::string& name);
std::string eval_mode_name(EvalMode mode);

struct EvalOptions {
    bool dedup_slot = false;  // single-slot modes: count each distinct word once
};

// Scores a system clustering (clusters of triple ids into `triples`) against
// the gold standard. Frame mode types system triples positionally from their
// gold entry (subject -> role1, verb -> FEE, object -> role2); slot modes
// project clusters onto that slot's words with summed weights.
Scores evaluate(const Clusters& system, const std::vector<Triple>& triples,
                const GoldStandard& gold, EvalMode mode, const EvalOptions& options = {});

// Gold TSV: "frame_id \t subject \t role1 \t verb \t object \t role2 [\t w]".
// '#' comment lines are skipped. Duplicate rows within a frame merge by
// summing weights.
GoldStandard load_gold(std::istream& in);
GoldStandard load_gold_file(const std::string& path);
void write_gold(std::ostream& out, const GoldStandard& gold);

// CSV report: header "mode,nmpu,nipu,f1", values as percentages with two
// decimals.
void write_scores_csv(std::ostream& out, const std::vector<std::pair<std::string, Scores>>& rows);

}  // namespace triframes
