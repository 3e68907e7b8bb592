#pragma once
// Builds the gold triple clusters from sentence-level frame annotations.
// Per frame, the two most frequently co-occurring roles are selected and
// every annotation containing both emits all (filler, FEE, filler)
// combinations; triples group by frame into gold clusters.

#include <iosfwd>
#include <string>
#include <vector>

#include "triframes/eval.hpp"

namespace triframes {

struct RoleFiller {
    std::string role;
    std::string filler;  // surface tokens, space-separated when multi-word
};

struct FrameAnnotation {
    std::string sentence_id;
    std::string frame;
    std::string fee;
    std::vector<RoleFiller> fillers;
};

// Annotation TSV: "sentence_id \t frame \t fee \t role \t filler", one filler
// per line; lines sharing (sentence_id, frame, fee) form one annotation.
// '#' comments and blank lines are skipped; malformed lines throw with the
// line number.
std::vector<FrameAnnotation> load_annotations(std::istream& in);
std::vector<FrameAnnotation> load_annotations_file(const std::string& path);

struct GoldBuildStats {
    std::size_t annotations = 0;
    std::size_t multiword_fee_dropped = 0;
    std::size_t multiword_fillers_dropped = 0;
    std::size_t too_few_roles_dropped = 0;
    std::size_t triples_emitted = 0;  // instances before dedup
};

// Gold construction:
//   1. drop multi-word role fillers;
//   2. drop annotations left with fewer than two distinct roles
//      (multi-word FEEs drop the whole annotation, with a warning);
//   3. per frame, select the role pair that co-occurs in the most
//      annotations (ties broken lexicographically);
//   4. emit every filler combination of the selected pair per annotation,
//      role1 = lexicographically smaller role name in the subject slot;
//   5. group by frame; duplicate triples merge with summed weights.
// Output frames are sorted by name, triples within a frame by word order.
GoldStandard build_gold(const std::vector<FrameAnnotation>& annotations,
                        GoldBuildStats* stats = nullptr);

}  // namespace triframes
