#include "triframes/gold_builder.hpp"

#include <algorithm>
#include <iostream>
#include <istream>
#include <map>
#include <stdexcept>

#include "triframes/text_io.hpp"

namespace triframes {

namespace {

bool multi_word(const std::string& text) { return text.find(' ') != std::string::npos; }

}  // namespace

std::vector<FrameAnnotation> load_annotations(std::istream& in) {
    std::vector<FrameAnnotation> annotations;
    std::map<std::tuple<std::string, std::string, std::string>, std::size_t> index;
    std::string line;
    std::size_t line_no = 0;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        const std::string where = "annotations line " + std::to_string(line_no);
        if (fields.size() != 5)
            throw std::runtime_error(where + ": expected 5 fields, got " +
                                     std::to_string(fields.size()));
        for (auto field : fields)
            if (field.empty()) throw std::runtime_error(where + ": empty field");

        auto key = std::make_tuple(std::string(fields[0]), std::string(fields[1]),
                                   std::string(fields[2]));
        auto [it, inserted] = index.emplace(key, annotations.size());
        if (inserted) {
            FrameAnnotation annotation;
            annotation.sentence_id = std::string(fields[0]);
            annotation.frame = std::string(fields[1]);
            annotation.fee = std::string(fields[2]);
            annotations.push_back(std::move(annotation));
        }
        annotations[it->second].fillers.push_back(
            {std::string(fields[3]), std::string(fields[4])});
    }
    return annotations;
}

std::vector<FrameAnnotation> load_annotations_file(const std::string& path) {
    auto in = open_input(path);
    return load_annotations(*in);
}

GoldStandard build_gold(const std::vector<FrameAnnotation>& annotations, GoldBuildStats* stats) {
    GoldBuildStats local;
    local.annotations = annotations.size();

    // Single-word fillers only, grouped per annotation as role -> fillers
    // (distinct, first-seen order).
    struct Cleaned {
        const FrameAnnotation* source;
        std::map<std::string, std::vector<std::string>> by_role;
    };
    std::map<std::string, std::vector<Cleaned>> by_frame;

    for (const auto& annotation : annotations) {
        if (multi_word(annotation.fee)) {
            std::cerr << "warning: dropping annotation " << annotation.sentence_id << " ("
                      << annotation.frame << "): multi-word FEE '" << annotation.fee << "'\n";
            ++local.multiword_fee_dropped;
            continue;
        }
        Cleaned cleaned;
        cleaned.source = &annotation;
        for (const auto& [role, filler] : annotation.fillers) {
            if (multi_word(filler)) {
                ++local.multiword_fillers_dropped;
                continue;
            }
            auto& fillers = cleaned.by_role[role];
            if (std::find(fillers.begin(), fillers.end(), filler) == fillers.end())
                fillers.push_back(filler);
        }
        if (cleaned.by_role.size() < 2) {
            ++local.too_few_roles_dropped;
            continue;
        }
        by_frame[annotation.frame].push_back(std::move(cleaned));
    }

    GoldStandard gold;
    for (const auto& [frame, cleaned_list] : by_frame) {
        // The pair of roles co-occurring in the most annotations; role pairs
        // are kept in lexicographic order so ties resolve to the smallest.
        std::map<std::pair<std::string, std::string>, std::size_t> cooccurrence;
        for (const auto& cleaned : cleaned_list) {
            std::vector<std::string> roles;
            roles.reserve(cleaned.by_role.size());
            for (const auto& [role, fillers] : cleaned.by_role) roles.push_back(role);
            for (std::size_t a = 0; a < roles.size(); ++a)
                for (std::size_t b = a + 1; b < roles.size(); ++b)
                    ++cooccurrence[{roles[a], roles[b]}];
        }
        std::pair<std::string, std::string> selected;
        std::size_t best = 0;
        for (const auto& [pair, count] : cooccurrence) {
            if (count > best) {
                best = count;
                selected = pair;
            }
        }
        if (best == 0) continue;  // no annotation with two roles

        // role1 is the lexicographically smaller role and fills the subject
        // slot; every filler combination of an annotation becomes a triple.
        std::map<std::tuple<std::string, std::string, std::string>, double> merged;
        for (const auto& cleaned : cleaned_list) {
            auto first = cleaned.by_role.find(selected.first);
            auto second = cleaned.by_role.find(selected.second);
            if (first == cleaned.by_role.end() || second == cleaned.by_role.end()) continue;
            for (const auto& subject : first->second) {
                for (const auto& object : second->second) {
                    merged[{subject, cleaned.source->fee, object}] += 1.0;
                    ++local.triples_emitted;
                }
            }
        }
        if (merged.empty()) continue;

        GoldFrame gold_frame;
        gold_frame.frame_id = frame;
        for (const auto& [words, weight] : merged) {
            TypedTriple t;
            t.subject = std::get<0>(words);
            t.role1 = selected.first;
            t.verb = std::get<1>(words);
            t.object = std::get<2>(words);
            t.role2 = selected.second;
            t.weight = weight;
            gold_frame.triples.push_back(std::move(t));
        }
        gold.frames.push_back(std::move(gold_frame));
    }

    if (stats) *stats = local;
    return gold;
}

}  // namespace triframes
