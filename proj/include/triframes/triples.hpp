#pragma once
// SVO triples with corpus frequencies, and their concatenated embeddings.
// A triple embeds as subject|verb|object vectors back to back (3d values);
// if any word is out of vocabulary the whole triple is dropped and reported.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "triframes/embeddings.hpp"
#include "triframes/matrix.hpp"

namespace triframes {

struct Triple {
    std::string subject;
    std::string verb;
    std::string object;
    double weight = 1.0;

    bool operator==(const Triple& other) const {
        return subject == other.subject && verb == other.verb && object == other.object &&
               weight == other.weight;
    }
};

struct TripleLoadOptions {
    bool lowercase = false;  // lowercase words before dedup and lookup
    double min_freq = 1.0;   // drop merged triples lighter than this
};

struct TripleLoadStats {
    std::size_t instances = 0;  // data lines parsed
    std::size_t unique = 0;     // triples after dedup
    std::size_t below_min_freq = 0;
};

// Reads TSV lines "subject \t verb \t object [\t frequency]". '#' comment
// lines and blank lines are skipped. Duplicate triples merge by summing
// weights; first-seen order is preserved. Malformed lines (wrong field
// count, bad or non-positive frequency, empty word) throw with the line
// number.
std::vector<Triple> load_triples(std::istream& in, const TripleLoadOptions& options = {},
                                 TripleLoadStats* stats = nullptr);

std::vector<Triple> load_triples_file(const std::string& path,
                                      const TripleLoadOptions& options = {},
                                      TripleLoadStats* stats = nullptr);

// Concatenated subject|verb|object vector, or a miss when any word is OOV.
std::optional<std::vector<double>> embed_triple(const EmbeddingModel& model, const Triple& t);

struct DroppedTriple {
    std::size_t triple = 0;                  // index into the input list
    std::vector<std::string> missing_words;  // which of s/v/o were OOV
};

struct EmbeddedStore {
    Matrix matrix;                            // one row per retained triple, 3d wide
    std::vector<std::size_t> row_to_triple;   // row -> input triple index
    std::vector<DroppedTriple> dropped;
};

// Embeds every triple; retained rows keep input order. Throws
// "empty embedding space" when nothing survives.
EmbeddedStore embed_store(const EmbeddingModel& model, const std::vector<Triple>& triples,
                          unsigned threads = 1);

}  // namespace triframes
