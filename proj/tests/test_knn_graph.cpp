#include <doctest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "triframes/knn.hpp"
#include "triframes/random.hpp"

using namespace triframes;

namespace {

Matrix random_unit_rows(std::size_t n, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    Matrix rows(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        auto row = rows.row(i);
        double norm = 0.0;
        for (double& x : row) {
            x = rng_normal(rng);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (double& x : row) x /= norm;
    }
    return rows;
}

std::map<std::pair<NodeId, NodeId>, double> edge_map(const WeightedGraph& g) {
    std::map<std::pair<NodeId, NodeId>, double> out;
    for (const auto& [u, v, w] : g.edges()) out[{u, v}] = w;
    return out;
}

}  // namespace

TEST_CASE("three mutually similar rows with k=2 form a complete graph") {
    Matrix rows(3, 2);
    rows.row(0)[0] = 1.0;
    rows.row(0)[1] = 0.1;
    rows.row(1)[0] = 1.0;
    rows.row(1)[1] = 0.2;
    rows.row(2)[0] = 1.0;
    rows.row(2)[1] = 0.3;
    WeightedGraph g = build_knn_graph(rows, {.k = 2});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    for (NodeId n = 0; n < 3; ++n) CHECK(g.degree(n) == 2);
}

TEST_CASE("knn graph matches the all-pairs oracle on random vectors") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Matrix rows = random_unit_rows(20, 4, seed);
        WeightedGraph g = build_knn_graph(rows, {.k = 3});
        auto expected = oracle::knn_edges_brute_force(rows, 3);
        auto actual = edge_map(g);
        REQUIRE(actual.size() == expected.size());
        for (const auto& [pair, weight] : expected) {
            REQUIRE(actual.count(pair) == 1);
            CHECK(actual[pair] == weight);
        }
        // Degree lower bound: any node with a positive-cosine companion
        // keeps at least one edge.
        for (std::size_t u = 0; u < rows.rows; ++u) {
            bool has_companion = false;
            std::vector<double> uv(rows.row(u).begin(), rows.row(u).end());
            for (std::size_t v = 0; v < rows.rows && !has_companion; ++v) {
                if (u == v) continue;
                std::vector<double> vv(rows.row(v).begin(), rows.row(v).end());
                has_companion = oracle::cosine_scalar(uv, vv) > 0.0;
            }
            if (has_companion) CHECK(g.degree(static_cast<NodeId>(u)) >= 1);
        }
    }
}

TEST_CASE("exact cosine ties at the cut break by ascending node id") {
    // Rows 1..4 all at cosine ~0.707 from row 0; k=2 must pick ids 1 and 2.
    Matrix rows(5, 2);
    rows.row(0)[0] = 1.0;
    for (std::size_t i = 1; i < 5; ++i) {
        rows.row(i)[0] = 1.0;
        rows.row(i)[1] = 1.0;
    }
    WeightedGraph g = build_knn_graph(rows, {.k = 2});
    auto expected = oracle::knn_edges_brute_force(rows, 2);
    CHECK(edge_map(g) == expected);
    // From node 0 the tie on {1,2,3,4} resolves to the two smallest ids.
    auto nbrs = g.neighbors(0);
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0].node == 1);
    CHECK(nbrs[1].node == 2);
}

TEST_CASE("orthogonal rows produce an edgeless graph") {
    Matrix rows(4, 4);
    for (std::size_t i = 0; i < 4; ++i) rows.row(i)[i] = 1.0;
    WeightedGraph g = build_knn_graph(rows, {.k = 2});
    CHECK(g.edge_count() == 0);
    for (NodeId n = 0; n < 4; ++n) CHECK(g.neighbors(n).empty());
}

TEST_CASE("k at or above the row count clamps to rows-1") {
    Matrix rows = random_unit_rows(4, 3, 1);
    WeightedGraph clamped = build_knn_graph(rows, {.k = 10});
    WeightedGraph exact = build_knn_graph(rows, {.k = 3});
    CHECK(edge_map(clamped) == edge_map(exact));
}

TEST_CASE("too few rows or zero k are errors") {
    Matrix one(1, 2);
    one.row(0)[0] = 1.0;
    CHECK_THROWS_AS(build_knn_graph(one, {.k = 1}), std::invalid_argument);
    Matrix two = random_unit_rows(2, 2, 2);
    CHECK_THROWS_AS(build_knn_graph(two, {.k = 0}), std::invalid_argument);
}

TEST_CASE("neighbor lists are symmetric, sorted, and bounded") {
    for (std::uint64_t seed = 10; seed < 15; ++seed) {
        Matrix rows = random_unit_rows(30, 5, seed);
        WeightedGraph g = build_knn_graph(rows, {.k = 4});
        for (NodeId u = 0; u < g.node_count(); ++u) {
            auto nbrs = g.neighbors(u);
            for (std::size_t i = 0; i + 1 < nbrs.size(); ++i)
                CHECK(nbrs[i].node < nbrs[i + 1].node);
            for (const Neighbor& nb : nbrs) {
                CHECK(nb.weight > 0.0);
                CHECK(nb.weight <= 1.0 + 1e-9);
                auto back = g.neighbors(nb.node);
                bool reciprocal = false;
                for (const Neighbor& r : back) reciprocal |= r.node == u;
                CHECK(reciprocal);
            }
        }
    }
}

TEST_CASE("all-positive cosine rows give every node degree >= k") {
    Rng rng(21);
    Matrix rows(12, 3);
    for (std::size_t i = 0; i < 12; ++i) {
        // strictly positive components => positive pairwise cosines
        for (double& x : rows.row(i)) x = 0.1 + rng_unit(rng);
    }
    const std::size_t k = 3;
    WeightedGraph g = build_knn_graph(rows, {.k = k});
    for (NodeId u = 0; u < g.node_count(); ++u) CHECK(g.degree(u) >= k);
}

TEST_CASE("graph construction is identical across thread counts") {
    Matrix rows = random_unit_rows(40, 6, 33);
    WeightedGraph g1 = build_knn_graph(rows, {.k = 5, .mutual = false, .threads = 1});
    WeightedGraph g8 = build_knn_graph(rows, {.k = 5, .mutual = false, .threads = 8});
    CHECK(edge_map(g1) == edge_map(g8));
}

TEST_CASE("mutual-knn keeps only reciprocated pairs") {
    Matrix rows = random_unit_rows(25, 4, 44);
    const std::size_t k = 3;
    WeightedGraph unioned = build_knn_graph(rows, {.k = k, .mutual = false});
    WeightedGraph mutual = build_knn_graph(rows, {.k = k, .mutual = true});
    auto union_edges = edge_map(unioned);
    auto mutual_edges = edge_map(mutual);
    CHECK(mutual_edges.size() <= union_edges.size());
    for (const auto& [pair, weight] : mutual_edges) {
        CHECK(union_edges.count(pair) == 1);
        CHECK(union_edges[pair] == weight);
    }
    // In a mutual graph no node exceeds degree k.
    for (NodeId u = 0; u < mutual.node_count(); ++u) CHECK(mutual.degree(u) <= k);
}

TEST_CASE("neighbors of an unknown node is an error") {
    Matrix rows = random_unit_rows(3, 2, 5);
    WeightedGraph g = build_knn_graph(rows, {.k = 1});
    CHECK_THROWS_AS(g.neighbors(99), std::out_of_range);
}

TEST_CASE("graph builder merges duplicate pairs keeping the maximum weight") {
    GraphBuilder b(3);
    b.add_edge(0, 1, 0.3);
    b.add_edge(1, 0, 0.7);  // same pair, other orientation
    b.add_edge(1, 2, 0.5);
    WeightedGraph g = std::move(b).build();
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_weight(0, 1) == 0.7);
    CHECK(g.edge_weight(2, 1) == 0.5);
    CHECK(!g.edge_weight(0, 2).has_value());
}

TEST_CASE("graph builder rejects malformed edges") {
    GraphBuilder b(3);
    CHECK_THROWS_AS(b.add_edge(1, 1, 0.5), std::logic_error);
    CHECK_THROWS_AS(b.add_edge(0, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 1, -0.2), std::invalid_argument);
    CHECK_THROWS_AS(b.add_edge(0, 5, 0.5), std::out_of_range);
}
