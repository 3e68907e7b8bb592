#pragma once
// Triframe aggregation: each triple cluster is projected onto its subject,
// verb, and object word sets.

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "triframes/clustering.hpp"
#include "triframes/triples.hpp"

namespace triframes {

struct Triframe {
    std::set<std::string> subjects;
    std::set<std::string> verbs;
    std::set<std::string> objects;
    std::vector<NodeId> member_triples;  // kept so evaluation can recover instances
};

// One triframe per cluster, in cluster order. Cluster node ids index
// `triples`; an out-of-range id throws.
std::vector<Triframe> aggregate_frames(const std::vector<Triple>& triples,
                                       const Clusters& clustering);

// Text dump, one block per frame:
//   # frame <n>
//   subjects: ...
//   verbs: ...
//   objects: ...
void write_triframes(std::ostream& out, const std::vector<Triframe>& frames);

}  // namespace triframes
