#pragma once
// Dense word vectors in the text word2vec format, plus the cosine similarity
// used throughout the pipeline. The model is immutable after load and safe
// for concurrent reads.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace triframes {

class EmbeddingModel {
public:
    EmbeddingModel() = default;
    EmbeddingModel(std::size_t dimension) : dimension_(dimension) {}

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return index_.size(); }

    // Exact-match lookup; absent word is a miss, not an error.
    std::optional<std::span<const double>> vector(std::string_view word) const;

    bool contains(std::string_view word) const { return index_.count(std::string(word)) > 0; }

    // Returns false (and stores nothing) when the word is already present.
    bool insert(std::string word, std::span<const double> values);

    // Rows skipped at load time because their vector was all zeros.
    std::size_t zero_rows_skipped = 0;
    // Rows skipped because the word was already present (first kept).
    std::size_t duplicate_rows_skipped = 0;

private:
    std::size_t dimension_ = 0;
    std::unordered_map<std::string, std::size_t> index_;  // word -> row
    std::vector<double> storage_;                         // row-major
};

// Parses the text word2vec format: an optional "<count> <dim>" header line,
// then one "word v1 .. vd" line per word. Duplicate words keep the first
// occurrence; all-zero vectors are skipped (cosine is undefined on them).
// Throws on empty input or a row whose width disagrees with the dimension.
EmbeddingModel load_embeddings(std::istream& in);

// File wrapper; names ending in ".gz" are decompressed transparently.
EmbeddingModel load_embeddings_file(const std::string& path);

// dot(a,b) / (|a||b|), clamped to [-1, 1]. Throws on length mismatch or a
// zero-norm input.
double cosine(std::span<const double> a, std::span<const double> b);

double norm(std::span<const double> v);

}  // namespace triframes
