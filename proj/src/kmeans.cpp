#include "triframes/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "triframes/parallel.hpp"
#include "triframes/random.hpp"

namespace triframes {

namespace {

double squared_distance(const double* a, const double* b, std::size_t d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

// k-means++ seeding: first centroid uniform, the rest sampled proportionally
// to the squared distance from the nearest chosen centroid.
Matrix seed_centroids(const Matrix& rows, std::size_t k, Rng& rng) {
    const std::size_t n = rows.rows;
    const std::size_t d = rows.cols;
    Matrix centroids(k, d);
    std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::uint8_t> chosen(n, 0);

    std::size_t first = static_cast<std::size_t>(rng_below(rng, n));
    auto take = [&](std::size_t c, std::size_t point) {
        auto src = rows.row(point);
        std::copy(src.begin(), src.end(), centroids.row(c).begin());
        chosen[point] = 1;
        for (std::size_t i = 0; i < n; ++i) {
            double dist = squared_distance(rows.data.data() + i * d, src.data(), d);
            if (dist < min_dist[i]) min_dist[i] = dist;
        }
    };
    take(0, first);

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) total += min_dist[i];
        std::size_t pick = n;  // sentinel
        if (total > 0.0) {
            double r = rng_unit(rng) * total;
            double cumulative = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                cumulative += min_dist[i];
                if (r < cumulative) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = n - 1;  // guard against rounding at the top end
        } else {
            // All mass at distance zero (duplicate-heavy data): take the
            // smallest index not yet chosen.
            for (std::size_t i = 0; i < n; ++i) {
                if (!chosen[i]) {
                    pick = i;
                    break;
                }
            }
            if (pick == n) pick = 0;
        }
        take(c, pick);
    }
    return centroids;
}

}  // namespace

KMeansResult kmeans(const Matrix& rows, const KMeansParams& params) {
    const std::size_t n = rows.rows;
    const std::size_t d = rows.cols;
    const std::size_t k = params.k;
    if (k == 0) throw std::invalid_argument("kmeans: k must be >= 1");
    if (k > n) throw std::invalid_argument("kmeans: k exceeds point count");
    if (params.max_iters < 1) throw std::invalid_argument("kmeans: max_iters must be >= 1");

    Rng rng(params.seed);
    Matrix centroids = seed_centroids(rows, k, rng);

    KMeansResult result;
    auto& labels = result.clustering.labels;
    labels.assign(n, 0);
    std::vector<double> assigned_dist(n, 0.0);
    std::vector<std::size_t> counts(k, 0);

    for (int iter = 0; iter < params.max_iters; ++iter) {
        // Assignment: nearest centroid, smallest index on ties.
        parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) {
                const double* point = rows.data.data() + i * d;
                double best = std::numeric_limits<double>::infinity();
                NodeId best_c = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    double dist = squared_distance(point, centroids.data.data() + c * d, d);
                    if (dist < best) {
                        best = dist;
                        best_c = static_cast<NodeId>(c);
                    }
                }
                labels[i] = best_c;
                assigned_dist[i] = best;
            }
        });

        std::fill(counts.begin(), counts.end(), 0);
        for (std::size_t i = 0; i < n; ++i) ++counts[labels[i]];

        // Repair empty clusters: steal the point farthest from its centroid
        // (from a cluster that can spare one), smallest index on ties.
        for (std::size_t c = 0; c < k; ++c) {
            if (counts[c] > 0) continue;
            std::size_t farthest = n;
            double far_dist = -1.0;
            for (std::size_t i = 0; i < n; ++i) {
                if (counts[labels[i]] < 2) continue;
                if (assigned_dist[i] > far_dist) {
                    far_dist = assigned_dist[i];
                    farthest = i;
                }
            }
            if (farthest == n) continue;  // nothing to spare
            --counts[labels[farthest]];
            labels[farthest] = static_cast<NodeId>(c);
            counts[c] = 1;
            assigned_dist[farthest] = 0.0;  // it will define the new centroid
        }

        // Update: mean of members, accumulated in point order.
        Matrix updated(k, d);
        for (std::size_t i = 0; i < n; ++i) {
            const double* point = rows.data.data() + i * d;
            double* sum = updated.data.data() + static_cast<std::size_t>(labels[i]) * d;
            for (std::size_t c = 0; c < d; ++c) sum[c] += point[c];
        }
        double max_shift = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            double* mean = updated.data.data() + c * d;
            if (counts[c] > 0)
                for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(counts[c]);
            else
                std::copy(centroids.row(c).begin(), centroids.row(c).end(), mean);
            double shift = std::sqrt(squared_distance(mean, centroids.data.data() + c * d, d));
            max_shift = std::max(max_shift, shift);
        }
        centroids = std::move(updated);
        result.iterations = iter + 1;

        double inertia = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            inertia += squared_distance(rows.data.data() + i * d,
                                        centroids.data.data() +
                                            static_cast<std::size_t>(labels[i]) * d,
                                        d);
        result.inertia_history.push_back(inertia);

        if (max_shift < params.tolerance) break;
    }
    return result;
}

void normalize_rows(Matrix& rows) {
    for (std::size_t i = 0; i < rows.rows; ++i) {
        auto row = rows.row(i);
        double sum = 0.0;
        for (double x : row) sum += x * x;
        if (sum == 0.0) continue;
        double inv = 1.0 / std::sqrt(sum);
        for (double& x : row) x *= inv;
    }
}

}  // namespace triframes
