#include "triframes/triples.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include "triframes/parallel.hpp"
#include "triframes/text_io.hpp"

namespace triframes {

namespace {

std::string lowercase_ascii(std::string_view word) {
    std::string out(word);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

std::vector<Triple> load_triples(std::istream& in, const TripleLoadOptions& options,
                                 TripleLoadStats* stats) {
    std::vector<Triple> triples;
    std::unordered_map<std::string, std::size_t> seen;  // "s\tv\to" -> index
    std::string line;
    std::size_t line_no = 0;
    std::size_t instances = 0;

    while (read_line(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_tabs(line);
        const std::string where = "triples line " + std::to_string(line_no);
        if (fields.size() != 3 && fields.size() != 4)
            throw std::runtime_error(where + ": expected 3 or 4 fields, got " +
                                     std::to_string(fields.size()));
        for (std::size_t i = 0; i < 3; ++i)
            if (fields[i].empty()) throw std::runtime_error(where + ": empty word");
        double weight = 1.0;
        if (fields.size() == 4) {
            weight = parse_double(fields[3], where);
            if (weight <= 0.0) throw std::runtime_error(where + ": non-positive frequency");
        }
        ++instances;

        Triple t;
        if (options.lowercase) {
            t.subject = lowercase_ascii(fields[0]);
            t.verb = lowercase_ascii(fields[1]);
            t.object = lowercase_ascii(fields[2]);
        } else {
            t.subject = std::string(fields[0]);
            t.verb = std::string(fields[1]);
            t.object = std::string(fields[2]);
        }
        t.weight = weight;

        std::string key = t.subject + '\t' + t.verb + '\t' + t.object;
        auto [it, inserted] = seen.emplace(std::move(key), triples.size());
        if (inserted)
            triples.push_back(std::move(t));
        else
            triples[it->second].weight += weight;
    }

    std::size_t unique = triples.size();
    auto keep_end = std::remove_if(triples.begin(), triples.end(),
                                   [&](const Triple& t) { return t.weight < options.min_freq; });
    std::size_t below = static_cast<std::size_t>(std::distance(keep_end, triples.end()));
    triples.erase(keep_end, triples.end());
    if (stats) {
        stats->instances = instances;
        stats->unique = unique;
        stats->below_min_freq = below;
    }
    return triples;
}

std::vector<Triple> load_triples_file(const std::string& path, const TripleLoadOptions& options,
                                      TripleLoadStats* stats) {
    auto in = open_input(path);
    return load_triples(*in, options, stats);
}

std::optional<std::vector<double>> embed_triple(const EmbeddingModel& model, const Triple& t) {
    auto s = model.vector(t.subject);
    auto v = model.vector(t.verb);
    auto o = model.vector(t.object);
    if (!s || !v || !o) return std::nullopt;
    std::vector<double> row;
    row.reserve(3 * model.dimension());
    row.insert(row.end(), s->begin(), s->end());
    row.insert(row.end(), v->begin(), v->end());
    row.insert(row.end(), o->begin(), o->end());
    return row;
}

EmbeddedStore embed_store(const EmbeddingModel& model, const std::vector<Triple>& triples,
                          unsigned threads) {
    const std::size_t d = model.dimension();
    const std::size_t n = triples.size();

    // First pass: vocabulary check per triple, parallel, order-independent.
    std::vector<std::uint8_t> retained(n, 0);
    parallel_for(n, threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Triple& t = triples[i];
            retained[i] = model.contains(t.subject) && model.contains(t.verb) &&
                                  model.contains(t.object)
                              ? 1
                              : 0;
        }
    });

    EmbeddedStore store;
    for (std::size_t i = 0; i < n; ++i) {
        if (retained[i]) {
            store.row_to_triple.push_back(i);
        } else {
            DroppedTriple dropped;
            dropped.triple = i;
            if (!model.contains(triples[i].subject))
                dropped.missing_words.push_back(triples[i].subject);
            if (!model.contains(triples[i].verb)) dropped.missing_words.push_back(triples[i].verb);
            if (!model.contains(triples[i].object))
                dropped.missing_words.push_back(triples[i].object);
            store.dropped.push_back(std::move(dropped));
        }
    }
    if (store.row_to_triple.empty()) throw std::runtime_error("empty embedding space");

    store.matrix = Matrix(store.row_to_triple.size(), 3 * d);
    parallel_for(store.row_to_triple.size(), threads, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            const Triple& t = triples[store.row_to_triple[r]];
            auto out = store.matrix.row(r);
            auto s = *model.vector(t.subject);
            auto v = *model.vector(t.verb);
            auto o = *model.vector(t.object);
            std::copy(s.begin(), s.end(), out.begin());
            std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(d));
            std::copy(o.begin(), o.end(), out.begin() + static_cast<std::ptrdiff_t>(2 * d));
        }
    });
    return store;
}

}  // namespace triframes
