#include <doctest.h>

#include <random>

#include "latcode/linalg.hpp"

using namespace latcode;

namespace {

IntMatrix from_longs(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return IntMatrix::from_rows(conv);
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

}  // namespace

TEST_CASE("determinant basics") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(from_longs({{0, 1}, {2, 1}})) == -2);

    // homogeneous vertex matrix of conv(0, 2e_1, ..., 2e_5)
    IntMatrix m(6, 6);
    for (std::size_t i = 1; i < 6; ++i) m.at(i, i - 1) = 2;
    for (std::size_t i = 0; i < 6; ++i) m.at(i, 5) = 1;
    CHECK(abs(determinant(m)) == 32);
}

TEST_CASE("determinant rejects non-square input") {
    CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("smith normal form on pinned inputs") {
    auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.u * IntMatrix::identity(3) * id.v == id.s);
    CHECK(id.s == IntMatrix::identity(3));

    auto d46 = smith_normal_form(from_longs({{4, 0}, {0, 6}}));
    CHECK(d46.s == from_longs({{2, 0}, {0, 12}}));

    auto zero = smith_normal_form(IntMatrix(2, 2));
    CHECK(zero.s == IntMatrix(2, 2));
}

TEST_CASE("hermite normal form on pinned inputs") {
    CHECK(hermite_normal_form(IntMatrix::identity(4)).h == IntMatrix::identity(4));
    CHECK(hermite_normal_form(from_longs({{2, 0}, {0, 2}})).h == from_longs({{2, 0}, {0, 2}}));
    CHECK(hermite_normal_form(from_longs({{1, 2}, {3, 4}})).h == from_longs({{1, 0}, {0, 2}}));
}

TEST_CASE("randomized decomposition invariants") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int iter = 0; iter < 300; ++iter) {
        const std::size_t m = size(rng), n = size(rng);
        IntMatrix a = random_matrix(rng, m, n, 9);

        auto snf = smith_normal_form(a);
        CHECK(snf.u * a * snf.v == snf.s);
        CHECK(abs(determinant(snf.u)) == 1);
        CHECK(abs(determinant(snf.v)) == 1);
        auto divisors = snf.elementary_divisors();
        for (std::size_t i = 0; i + 1 < divisors.size(); ++i)
            CHECK(divisors[i + 1] % divisors[i] == 0);
        if (m == n) {
            Int det = determinant(a);
            CHECK(abs(determinant(snf.s)) == abs(det));
            if (det != 0) {
                Int prod = 1;
                for (const auto& d : divisors) prod *= d;
                CHECK(prod == abs(det));
            }
        }

        auto hnf = hermite_normal_form(a);
        CHECK(hnf.u * a == hnf.h);
        CHECK(abs(determinant(hnf.u)) == 1);

        // two equal rows kill the determinant
        if (m == n && n >= 2) {
            IntMatrix b = a;
            for (std::size_t j = 0; j < n; ++j) b.at(0, j) = b.at(n - 1, j);
            CHECK(determinant(b) == 0);
        }
    }
}

TEST_CASE("randomized adjugate identity") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> size(1, 5);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = size(rng);
        IntMatrix a = random_matrix(rng, n, n, 6);
        if (determinant(a) == 0) continue;
        auto adjd = adjugate(a);
        IntMatrix expected(n, n);
        for (std::size_t i = 0; i < n; ++i) expected.at(i, i) = adjd.det;
        CHECK(a * adjd.adj == expected);
        CHECK(adjd.adj * a == expected);
    }
}
