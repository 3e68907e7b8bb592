#include "triframes/embeddings.hpp"

#include <cmath>
#include <istream>
#include <stdexcept>

#include "triframes/text_io.hpp"

namespace triframes {

std::optional<std::span<const double>> EmbeddingModel::vector(std::string_view word) const {
    auto it = index_.find(std::string(word));
    if (it == index_.end()) return std::nullopt;
    return std::span<const double>{storage_.data() + it->second * dimension_, dimension_};
}

bool EmbeddingModel::insert(std::string word, std::span<const double> values) {
    if (values.size() != dimension_) throw std::invalid_argument("vector width != dimension");
    auto [it, inserted] = index_.emplace(std::move(word), index_.size());
    if (!inserted) return false;
    storage_.insert(storage_.end(), values.begin(), values.end());
    return true;
}

namespace {

bool looks_like_header(const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 2) return false;
    for (auto tok : tokens) {
        for (char c : tok)
            if (c < '0' || c > '9') return false;
        if (tok.empty()) return false;
    }
    return true;
}

}  // namespace

EmbeddingModel load_embeddings(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::size_t dimension = 0;
    bool have_model = false;
    EmbeddingModel model;
    std::vector<double> values;

    while (read_line(in, line)) {
        ++line_no;
        auto tokens = split_whitespace(line);
        if (tokens.empty()) continue;
        if (!have_model && looks_like_header(tokens)) {
            // "<count> <dim>" header; the count is advisory.
            dimension = static_cast<std::size_t>(
                parse_int(tokens[1], "embeddings line " + std::to_string(line_no)));
            if (dimension == 0)
                throw std::runtime_error("embeddings line " + std::to_string(line_no) +
                                         ": zero dimension");
            model = EmbeddingModel(dimension);
            have_model = true;
            continue;
        }
        if (!have_model) {
            if (tokens.size() < 2)
                throw std::runtime_error("embeddings line " + std::to_string(line_no) +
                                         ": expected a word and at least one value");
            dimension = tokens.size() - 1;
            model = EmbeddingModel(dimension);
            have_model = true;
        }
        if (tokens.size() != dimension + 1)
            throw std::runtime_error("embeddings line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(dimension) + " values, got " +
                                     std::to_string(tokens.size() - 1));
        values.clear();
        values.reserve(dimension);
        bool all_zero = true;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            double v = parse_double(tokens[i], "embeddings line " + std::to_string(line_no));
            if (v != 0.0) all_zero = false;
            values.push_back(v);
        }
        if (all_zero) {
            ++model.zero_rows_skipped;
            continue;
        }
        if (!model.insert(std::string(tokens[0]), values)) ++model.duplicate_rows_skipped;
    }
    if (!have_model || model.size() == 0)
        throw std::runtime_error("embeddings: empty input");
    return model;
}

EmbeddingModel load_embeddings_file(const std::string& path) {
    auto in = open_input(path);
    return load_embeddings(*in);
}

double norm(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += x * x;
    return std::sqrt(sum);
}

double cosine(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("cosine: length mismatch");
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        dot += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) throw std::domain_error("cosine: zero-norm vector");
    double value = dot / (std::sqrt(na) * std::sqrt(nb));
    if (value > 1.0) value = 1.0;
    if (value < -1.0) value = -1.0;
    return value;
}

}  // namespace triframes
