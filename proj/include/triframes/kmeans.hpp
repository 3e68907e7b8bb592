#pragma once
// Lloyd's k-means with k-means++ seeding on Euclidean distance. Empty
// clusters are repaired by stealing the point farthest from its centroid.

#include <cstdint>
#include <vector>

#include "triframes/clustering.hpp"
#include "triframes/matrix.hpp"

namespace triframes {

struct KMeansParams {
    std::size_t k = 2;
    int max_iters = 100;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;  // stop when every centroid moves less than this
    unsigned threads = 1;     // 0 = auto
};

struct KMeansResult {
    HardClustering clustering;            // labels are centroid indices 0..k-1
    std::vector<double> inertia_history;  // sum of squared distances, per iteration
    int iterations = 0;
};

// Throws when k == 0 or k > rows.
KMeansResult kmeans(const Matrix& rows, const KMeansParams& params);

// Scales every row to unit L2 norm in place; zero rows are left untouched.
void normalize_rows(Matrix& rows);

}  // namespace triframes
