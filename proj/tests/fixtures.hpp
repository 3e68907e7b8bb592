#pragma once
// Synthetic planted-frame corpus: every frame owns orthogonal embedding
// directions per slot, so same-frame words sit at cosine near 1 and
// cross-frame words near 0. Serialized as the pipeline's text formats.

#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "triframes/random.hpp"
#include "triframes/text_io.hpp"

namespace fixtures {

struct PlantedFrames {
    std::string embeddings_text;  // text word2vec
    std::string triples_text;     // SVO TSV, weight 1 each
    std::string gold_text;        // gold TSV, one frame per planted frame
    std::size_t frame_count = 0;
    std::size_t triple_count = 0;
};

inline PlantedFrames make_planted_frames(std::size_t frames, std::size_t triples_per_frame,
                                         std::uint64_t seed) {
    const std::size_t subjects = 4, verbs = 3, objects = 4;
    const std::size_t dims = 3 * frames;  // one axis per (frame, slot)
    const double noise = 0.02;
    triframes::Rng rng(seed);

    struct Word {
        std::string text;
        std::vector<double> vec;
        std::size_t frame;
    };
    std::vector<Word> words;
    auto add_words = [&](std::size_t frame, char slot, std::size_t count, std::size_t axis) {
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<double> v(dims, 0.0);
            v[axis] = 1.0;
            for (std::size_t d = 0; d < dims; ++d) v[d] += noise * triframes::rng_normal(rng);
            words.push_back({std::string(1, slot) + std::to_string(frame) + "w" +
                                 std::to_string(i),
                             std::move(v), frame});
        }
    };
    for (std::size_t f = 0; f < frames; ++f) {
        add_words(f, 's', subjects, 3 * f);
        add_words(f, 'v', verbs, 3 * f + 1);
        add_words(f, 'o', objects, 3 * f + 2);
    }

    // The construction promises tight frame clusters and well-separated
    // frames; verify rather than assume.
    for (std::size_t a = 0; a < words.size(); ++a) {
        for (std::size_t b = a + 1; b < words.size(); ++b) {
            double dot = 0.0, na = 0.0, nb = 0.0;
            for (std::size_t d = 0; d < dims; ++d) {
                dot += words[a].vec[d] * words[b].vec[d];
                na += words[a].vec[d] * words[a].vec[d];
                nb += words[b].vec[d] * words[b].vec[d];
            }
            double cos = dot / std::sqrt(na * nb);
            bool same_slot_cluster =
                words[a].frame == words[b].frame && words[a].text[0] == words[b].text[0];
            if (same_slot_cluster && cos <= 0.9)
                throw std::runtime_error("planted fixture: intra-cluster cosine too low");
            if (!same_slot_cluster && cos >= 0.2)
                throw std::runtime_error("planted fixture: inter-cluster cosine too high");
        }
    }

    PlantedFrames out;
    out.frame_count = frames;

    std::ostringstream emb;
    emb << words.size() << ' ' << dims << '\n';
    for (const auto& word : words) {
        emb << word.text;
        for (double x : word.vec) emb << ' ' << triframes::format_double(x);
        emb << '\n';
    }
    out.embeddings_text = emb.str();

    // Sample triples_per_frame distinct (s, v, o) combinations per frame.
    std::ostringstream triples, gold;
    for (std::size_t f = 0; f < frames; ++f) {
        std::set<std::size_t> taken;
        while (taken.size() < triples_per_frame)
            taken.insert(triframes::rng_below(rng, subjects * verbs * objects));
        for (std::size_t combo : taken) {
            std::size_t s = combo / (verbs * objects);
            std::size_t v = (combo / objects) % verbs;
            std::size_t o = combo % objects;
            std::string sw = "s" + std::to_string(f) + "w" + std::to_string(s);
            std::string vw = "v" + std::to_string(f) + "w" + std::to_string(v);
            std::string ow = "o" + std::to_string(f) + "w" + std::to_string(o);
            triples << sw << '\t' << vw << '\t' << ow << "\t1\n";
            gold << "frame" << f << '\t' << sw << "\tagent\t" << vw << '\t' << ow
                 << "\ttheme\t1\n";
            ++out.triple_count;
        }
    }
    out.triples_text = triples.str();
    out.gold_text = gold.str();
    return out;
}

}  // namespace fixtures
