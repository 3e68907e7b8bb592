#include <doctest.h>

#include <zlib.h>

#include <cstring>
#include <filesystem>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "triframes/embeddings.hpp"
#include "triframes/random.hpp"
#include "triframes/text_io.hpp"

using namespace triframes;

TEST_CASE("load_embeddings parses the headered word2vec text format") {
    std::istringstream in("2 3\na 1 0 0\nb 0 1 0\n");
    EmbeddingModel model = load_embeddings(in);
    CHECK(model.dimension() == 3);
    CHECK(model.size() == 2);
    auto a = model.vector("a");
    REQUIRE(a.has_value());
    CHECK((*a)[0] == 1.0);
    CHECK((*a)[1] == 0.0);
}

TEST_CASE("load_embeddings infers the dimension without a header") {
    std::istringstream in("a 1 0 0\nb 0 1 0\n");
    EmbeddingModel model = load_embeddings(in);
    CHECK(model.dimension() == 3);
    CHECK(model.size() == 2);
}

TEST_CASE("load_embeddings reports the line of a width mismatch") {
    std::istringstream in("2 3\na 1 0 0\nc 1 2\n");
    CHECK_THROWS_WITH_AS(load_embeddings(in), doctest::Contains("line 3"), std::runtime_error);
}

TEST_CASE("load_embeddings rejects empty input") {
    std::istringstream empty("");
    CHECK_THROWS_AS(load_embeddings(empty), std::runtime_error);
    std::istringstream header_only("5 300\n");
    CHECK_THROWS_AS(load_embeddings(header_only), std::runtime_error);
}

TEST_CASE("duplicate words keep the first vector") {
    std::istringstream in("a 1 0\na 0 1\n");
    EmbeddingModel model = load_embeddings(in);
    CHECK(model.size() == 1);
    CHECK(model.duplicate_rows_skipped == 1);
    CHECK((*model.vector("a"))[0] == 1.0);
}

TEST_CASE("all-zero vectors are skipped at load") {
    std::istringstream in("a 0 0\nb 1 0\n");
    EmbeddingModel model = load_embeddings(in);
    CHECK(model.size() == 1);
    CHECK(model.zero_rows_skipped == 1);
    CHECK(!model.vector("a").has_value());
}

TEST_CASE("lookup is an exact, case-sensitive match") {
    std::istringstream in("a 1 0\n");
    EmbeddingModel model = load_embeddings(in);
    CHECK(model.vector("a").has_value());
    CHECK(!model.vector("zzz").has_value());
    CHECK(!model.vector("A").has_value());
}

TEST_CASE("cosine basics") {
    std::vector<double> v{3.0, -2.0, 0.5};
    CHECK(cosine(v, v) == doctest::Approx(1.0).epsilon(1e-12));
    std::vector<double> x{1.0, 0.0}, y{0.0, 1.0};
    CHECK(cosine(x, y) == 0.0);

    std::vector<double> a{1.0, 1.0}, b{1.0, 0.0};
    CHECK(cosine(a, b) == doctest::Approx(oracle::cosine_scalar(a, b)).epsilon(1e-12));
}

TEST_CASE("cosine rejects bad input") {
    std::vector<double> a{1.0, 0.0}, zero{0.0, 0.0}, shorter{1.0};
    CHECK_THROWS_AS(cosine(a, zero), std::domain_error);
    CHECK_THROWS_AS(cosine(a, shorter), std::invalid_argument);
}

TEST_CASE("cosine symmetry and scale invariance over random vectors") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t d = 1 + rng_below(rng, 8);
        std::vector<double> a(d), b(d);
        for (std::size_t i = 0; i < d; ++i) {
            a[i] = rng_normal(rng);
            b[i] = rng_normal(rng);
        }
        if (norm(a) == 0.0 || norm(b) == 0.0) continue;
        CHECK(cosine(a, b) == doctest::Approx(cosine(b, a)).epsilon(1e-12));
        double scale = 0.001 + 10.0 * rng_unit(rng);
        std::vector<double> scaled(a);
        for (double& x : scaled) x *= scale;
        CHECK(cosine(scaled, b) == doctest::Approx(cosine(a, b)).epsilon(1e-9));
        CHECK(cosine(a, b) >= -1.0);
        CHECK(cosine(a, b) <= 1.0);
    }
}

TEST_CASE("written vectors reload bit-identically") {
    Rng rng(11);
    std::vector<std::vector<double>> vectors;
    std::ostringstream file;
    file << "20 5\n";
    for (int w = 0; w < 20; ++w) {
        std::vector<double> v(5);
        for (double& x : v) x = rng_normal(rng) * 1e3;
        file << "w" << w;
        for (double x : v) file << ' ' << format_double(x);
        file << '\n';
        vectors.push_back(std::move(v));
    }
    std::istringstream in(file.str());
    EmbeddingModel model = load_embeddings(in);
    REQUIRE(model.size() == 20);
    for (int w = 0; w < 20; ++w) {
        auto stored = model.vector("w" + std::to_string(w));
        REQUIRE(stored.has_value());
        for (std::size_t i = 0; i < 5; ++i) CHECK((*stored)[i] == vectors[w][i]);
    }
}

TEST_CASE("gzip-compressed embedding files load transparently") {
    auto path = std::filesystem::temp_directory_path() / "triframes_test_emb.txt.gz";
    gzFile gz = gzopen(path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    const char* content = "2 2\na 1 0\nb 0 1\n";
    gzwrite(gz, content, static_cast<unsigned>(std::strlen(content)));
    gzclose(gz);

    EmbeddingModel model = load_embeddings_file(path.string());
    CHECK(model.size() == 2);
    CHECK(model.dimension() == 2);
    CHECK(model.vector("b").has_value());
    std::filesystem::remove(path);
}
