#pragma once
// Exact brute-force k-nearest-neighbor graph over row vectors. For each row
// the k highest-cosine other rows are found (ties at the cut broken by
// ascending row id), the directed lists are symmetrized, and edges with
// non-positive cosine are discarded. Deterministic for any thread count.

#include "triframes/graph.hpp"
#include "triframes/matrix.hpp"

namespace triframes {

struct KnnOptions {
    std::size_t k = 10;
    bool mutual = false;   // keep an edge only when both directions agree
    unsigned threads = 1;  // 0 = auto
};

// Throws when rows < 2. k >= rows is clamped to rows - 1 with a warning on
// stderr.
WeightedGraph build_knn_graph(const Matrix& rows, const KnnOptions& options);

}  // namespace triframes
