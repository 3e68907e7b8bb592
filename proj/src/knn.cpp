#include "triframes/knn.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "triframes/parallel.hpp"

namespace triframes {

namespace {

struct Candidate {
    double cosine;
    NodeId node;
};

// Higher cosine first; ascending node id on ties (the deterministic cut rule).
bool better(const Candidate& a, const Candidate& b) {
    if (a.cosine != b.cosine) return a.cosine > b.cosine;
    return a.node < b.node;
}

}  // namespace

WeightedGraph build_knn_graph(const Matrix& rows, const KnnOptions& options) {
    const std::size_t n = rows.rows;
    if (n < 2) throw std::invalid_argument("build_knn_graph: need at least 2 rows");
    std::size_t k = options.k;
    if (k == 0) throw std::invalid_argument("build_knn_graph: k must be >= 1");
    if (k >= n) {
        std::cerr << "warning: k=" << k << " >= " << n << " rows; clamping to " << n - 1 << "\n";
        k = n - 1;
    }

    std::vector<double> norms(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = rows.row(i);
        double sum = 0.0;
        for (double x : r) sum += x * x;
        norms[i] = std::sqrt(sum);
        if (norms[i] == 0.0)
            throw std::domain_error("build_knn_graph: zero-norm row " + std::to_string(i));
    }

    // Directed top-k per query row; slots are independent, so parallel blocks
    // produce identical results for any thread count.
    std::vector<std::vector<Candidate>> top(n);
    const double* data = rows.data.data();
    const std::size_t d = rows.cols;
    parallel_for(n, options.threads, [&](std::size_t begin, std::size_t end) {
        std::vector<Candidate> candidates;
        candidates.reserve(n - 1);
        for (std::size_t q = begin; q < end; ++q) {
            const double* qrow = data + q * d;
            candidates.clear();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == q) continue;
                const double* jrow = data + j * d;
                double dot = 0.0;
                for (std::size_t c = 0; c < d; ++c) dot += qrow[c] * jrow[c];
                double cos = dot / (norms[q] * norms[j]);
                if (cos > 1.0) cos = 1.0;
                if (cos < -1.0) cos = -1.0;
                candidates.push_back({cos, static_cast<NodeId>(j)});
            }
            auto cut = candidates.begin() + static_cast<std::ptrdiff_t>(k);
            std::partial_sort(candidates.begin(), cut, candidates.end(), better);
            auto& list = top[q];
            list.reserve(k);
            for (auto it = candidates.begin(); it != cut; ++it)
                if (it->cosine > 0.0) list.push_back(*it);
        }
    });

    GraphBuilder builder(n);
    if (options.mutual) {
        for (NodeId u = 0; u < n; ++u) {
            for (const Candidate& c : top[u]) {
                if (c.node < u) continue;  // each pair once, from the lower id
                const auto& back = top[c.node];
                bool reciprocated =
                    std::any_of(back.begin(), back.end(),
                                [u](const Candidate& r) { return r.node == u; });
                if (reciprocated) builder.add_edge(u, c.node, c.cosine);
            }
        }
    } else {
        for (NodeId u = 0; u < n; ++u)
            for (const Candidate& c : top[u]) builder.add_edge(u, c.node, c.cosine);
    }
    return std::move(builder).build();
}

}  // namespace triframes
