#include "triframes/frames.hpp"

#include <ostream>
#include <stdexcept>

namespace triframes {

std::vector<Triframe> aggregate_frames(const std::vector<Triple>& triples,
                                       const Clusters& clustering) {
    std::vector<Triframe> frames;
    frames.reserve(clustering.size());
    for (const auto& cluster : clustering) {
        Triframe frame;
        for (NodeId id : cluster) {
            if (id >= triples.size())
                throw std::out_of_range("cluster references unknown triple id " +
                                        std::to_string(id));
            const Triple& t = triples[id];
            frame.subjects.insert(t.subject);
            frame.verbs.insert(t.verb);
            frame.objects.insert(t.object);
            frame.member_triples.push_back(id);
        }
        frames.push_back(std::move(frame));
    }
    return frames;
}

namespace {

void write_words(std::ostream& out, const char* slot, const std::set<std::string>& words) {
    out << slot << ':';
    for (const auto& word : words) out << ' ' << word;
    out << '\n';
}

}  // namespace

void write_triframes(std::ostream& out, const std::vector<Triframe>& frames) {
    for (std::size_t i = 0; i < frames.size(); ++i) {
        out << "# frame " << i << '\n';
        write_words(out, "subjects", frames[i].subjects);
        write_words(out, "verbs", frames[i].verbs);
        write_words(out, "objects", frames[i].objects);
        out << '\n';
    }
}

}  // namespace triframes
