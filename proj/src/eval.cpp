#include "triframes/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <istream>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "triframes/text_io.hpp"

namespace triframes {

namespace {

double total_cluster_weight(const std::vector<WeightedCluster>& clusters) {
    double total = 0.0;
    for (const auto& cluster : clusters)
        for (const auto& [element, weight] : cluster) total += weight;
    return total;
}

// element -> clusters containing it, ascending cluster index.
std::unordered_map<std::string, std::vector<std::size_t>> invert(
    const std::vector<WeightedCluster>& clusters) {
    std::unordered_map<std::string, std::vector<std::size_t>> index;
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (const auto& [element, weight] : clusters[i]) index[element].push_back(i);
    return index;
}

// Best weighted overlap of `cluster` with any indexed cluster; weights come
// from `cluster` itself. Accumulation follows element order, then ascending
// overlap-partner order, so the result is deterministic.
double best_overlap(const WeightedCluster& cluster,
                    const std::unordered_map<std::string, std::vector<std::size_t>>& index) {
    std::map<std::size_t, double> overlap;
    for (const auto& [element, weight] : cluster) {
        auto it = index.find(element);
        if (it == index.end()) continue;
        for (std::size_t partner : it->second) overlap[partner] += weight;
    }
    double best = 0.0;
    for (const auto& [partner, mass] : overlap) best = std::max(best, mass);
    return best;
}

}  // namespace

double nmpu(const std::vector<WeightedCluster>& system,
            const std::vector<WeightedCluster>& gold) {
    if (gold.empty()) throw std::invalid_argument("nmpu: empty gold clustering");
    double total = total_cluster_weight(system);
    if (system.empty() || total == 0.0) {
        std::cerr << "warning: scoring an empty system clustering\n";
        return 0.0;
    }
    auto gold_index = invert(gold);
    double sum = 0.0;
    for (const auto& cluster : system) {
        if (cluster.size() <= 1) continue;  // singletons count as wrong
        sum += best_overlap(cluster, gold_index);
    }
    return sum / total;
}

double nipu(const std::vector<WeightedCluster>& system,
            const std::vector<WeightedCluster>& gold) {
    if (gold.empty()) throw std::invalid_argument("nipu: empty gold clustering");
    double total = total_cluster_weight(gold);
    if (total == 0.0) throw std::invalid_argument("nipu: gold has no weight");
    auto system_index = invert(system);
    double sum = 0.0;
    for (const auto& cluster : gold) sum += best_overlap(cluster, system_index);
    return sum / total;
}

double f1_score(double nmpu_value, double nipu_value) {
    if (nmpu_value <= 0.0 || nipu_value <= 0.0) return 0.0;
    return 2.0 * nmpu_value * nipu_value / (nmpu_value + nipu_value);
}

double GoldStandard::total_weight() const {
    double total = 0.0;
    for (const auto& frame : frames)
        for (const auto& t : frame.triples) total += t.weight;
    return total;
}

WeightedCluster frame_tuples(const std::vector<TypedTriple>& cluster) {
    WeightedCluster pairs;
    for (const TypedTriple& t : cluster) {
        if (t.role1.empty() || t.role2.empty())
            throw std::runtime_error("frame_tuples: missing role label on triple '" + t.subject +
                                     " " + t.verb + " " + t.object + "'");
        pairs[t.subject + '\t' + t.role1] += t.weight;
        pairs[t.verb + "\tFEE"] += t.weight;
        pairs[t.object + '\t' + t.role2] += t.weight;
    }
    return pairs;
}

EvalMode parse_eval_mode(const std::string& name) {
    if (name == "frame") return EvalMode::Frame;
    if (name == "verb") return EvalMode::Verb;
    if (name == "subject") return EvalMode::Subject;
    if (name == "object") return EvalMode::Object;
    throw std::invalid_argument("unknown evaluation mode: " + name);
}

std::string eval_mode_name(EvalMode mode) {
    switch (mode) {
        case EvalMode::Frame: return "frame";
        case EvalMode::Verb: return "verb";
        case EvalMode::Subject: return "subject";
        case EvalMode::Object: return "object";
    }
    return "?";
}

namespace {

const std::string& slot_word(const Triple& t, EvalMode mode) {
    switch (mode) {
        case EvalMode::Verb: return t.verb;
        case EvalMode::Subject: return t.subject;
        case EvalMode::Object: return t.object;
        default: throw std::logic_error("slot_word: not a slot mode");
    }
}

const std::string& gold_slot_word(const TypedTriple& t, EvalMode mode) {
    switch (mode) {
        case EvalMode::Verb: return t.verb;
        case EvalMode::Subject: return t.subject;
        case EvalMode::Object: return t.object;
        default: throw std::logic_error("gold_slot_word: not a slot mode");
    }
}

void add_weight(WeightedCluster& cluster, const std::string& element, double weight,
                bool dedup) {
    if (dedup)
        cluster[element] = 1.0;
    else
        cluster[element] += weight;
}

std::string triple_key(const std::string& s, const std::string& v, const std::string& o) {
    return s + '\t' + v + '\t' + o;
}

}  // namespace

Scores evaluate(const Clusters& system, const std::vector<Triple>& triples,
                const GoldStandard& gold, EvalMode mode, const EvalOptions& options) {
    std::vector<WeightedCluster> system_clusters;
    std::vector<WeightedCluster> gold_clusters;
    system_clusters.reserve(system.size());
    gold_clusters.reserve(gold.frames.size());

    for (const auto& cluster : system)
        for (NodeId id : cluster)
            if (id >= triples.size())
                throw std::out_of_range("system cluster references unknown triple id " +
                                        std::to_string(id));

    if (mode == EvalMode::Frame) {
        // Gold side: union of typed pairs per frame. System side: triples take
        // the role names of their gold entry positionally (subject -> role1,
        // verb -> FEE, object -> role2); a triple typed differently by several
        // frames contributes each distinct pair once.
        std::unordered_map<std::string, std::vector<std::pair<std::string, std::string>>> typing;
        for (const auto& frame : gold.frames) {
            for (const auto& t : frame.triples) {
                auto& typings = typing[triple_key(t.subject, t.verb, t.object)];
                std::pair<std::string, std::string> roles{t.role1, t.role2};
                if (std::find(typings.begin(), typings.end(), roles) == typings.end())
                    typings.push_back(roles);
            }
        }
        for (const auto& frame : gold.frames) gold_clusters.push_back(frame_tuples(frame.triples));

        for (const auto& cluster : system) {
            WeightedCluster pairs;
            for (NodeId id : cluster) {
                const Triple& t = triples[id];
                auto it = typing.find(triple_key(t.subject, t.verb, t.object));
                if (it == typing.end())
                    throw std::runtime_error("triple not in gold universe: " + t.subject + " " +
                                             t.verb + " " + t.object);
                std::set<std::string> keys;
                for (const auto& [role1, role2] : it->second) {
                    keys.insert(t.subject + '\t' + role1);
                    keys.insert(t.verb + "\tFEE");
                    keys.insert(t.object + '\t' + role2);
                }
                for (const auto& key : keys) pairs[key] += t.weight;
            }
            system_clusters.push_back(std::move(pairs));
        }
    } else {
        for (const auto& frame : gold.frames) {
            WeightedCluster words;
            for (const auto& t : frame.triples)
                add_weight(words, gold_slot_word(t, mode), t.weight, options.dedup_slot);
            gold_clusters.push_back(std::move(words));
        }
        for (const auto& cluster : system) {
            WeightedCluster words;
            for (NodeId id : cluster)
                add_weight(words, slot_word(triples[id], mode), triples[id].weight,
                           options.dedup_slot);
            system_clusters.push_back(std::move(words));
        }
    }

    Scores scores;
    scores.nmpu = nmpu(system_clusters, gold_clusters);
    scores.nipu = nipu(system_clusters, gold_clusters);
    scores.f1 = f1_score(scores.nmpu, scores.nipu);
    return scores;
}

GoldStandard load_gold(std::istream& in) {
    GoldStandard gold;
    std::unordered_map<std::string, std::size_t> frame_index;
    // per frame: joined row fields -> triple index, for duplicate merging
    std::vector<std::unordered_map<std::string, std::size_t>> row_index;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        const std::string where = "gold line " + std::to_string(line_no);
        if (fields.size() != 6 && fields.size() != 7)
            throw std::runtime_error(where + ": expected 6 or 7 fields, got " +
                                     std::to_string(fields.size()));
        for (std::size_t i = 0; i < 6; ++i)
            if (fields[i].empty()) throw std::runtime_error(where + ": empty field");
        TypedTriple t;
        t.subject = std::string(fields[1]);
        t.role1 = std::string(fields[2]);
        t.verb = std::string(fields[3]);
        t.object = std::string(fields[4]);
        t.role2 = std::string(fields[5]);
        t.weight = fields.size() == 7 ? parse_double(fields[6], where) : 1.0;
        if (t.weight <= 0.0) throw std::runtime_error(where + ": non-positive weight");

        std::string frame_id(fields[0]);
        auto [frame_it, frame_inserted] = frame_index.emplace(frame_id, gold.frames.size());
        if (frame_inserted) {
            gold.frames.push_back({frame_id, {}});
            row_index.emplace_back();
        }
        auto& triples = gold.frames[frame_it->second].triples;
        std::string key =
            t.subject + '\t' + t.role1 + '\t' + t.verb + '\t' + t.object + '\t' + t.role2;
        auto [row_it, row_inserted] =
            row_index[frame_it->second].emplace(std::move(key), triples.size());
        if (row_inserted)
            triples.push_back(std::move(t));
        else
            triples[row_it->second].weight += t.weight;
    }
    return gold;
}

GoldStandard load_gold_file(const std::string& path) {
    auto in = open_input(path);
    return load_gold(*in);
}

void write_gold(std::ostream& out, const GoldStandard& gold) {
    out << "# frame\tsubject\trole1\tverb\tobject\trole2\tweight\n";
    out << "# role1 and role2 are the frame's selected roles in lexicographic order\n";
    for (const auto& frame : gold.frames)
        for (const auto& t : frame.triples)
            out << frame.frame_id << '\t' << t.subject << '\t' << t.role1 << '\t' << t.verb
                << '\t' << t.object << '\t' << t.role2 << '\t' << format_double(t.weight) << '\n';
}

void write_scores_csv(std::ostream& out,
                      const std::vector<std::pair<std::string, Scores>>& rows) {
    out << "mode,nmpu,nipu,f1\n";
    char buf[128];
    for (const auto& [mode, scores] : rows) {
        std::snprintf(buf, sizeof(buf), "%s,%.2f,%.2f,%.2f", mode.c_str(), 100.0 * scores.nmpu,
                      100.0 * scores.nipu, 100.0 * scores.f1);
        out << buf << '\n';
    }
}

}  // namespace triframes
