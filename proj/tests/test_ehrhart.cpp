#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "latcode/correspond.hpp"
#include "latcode/ehrhart.hpp"
#include "latcode/io.hpp"

using namespace latcode;
using namespace latcode::testing;

namespace {

LatticeSimplex simplex_from_longs(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Int>> conv;
    for (const auto& r : rows) conv.emplace_back(r.begin(), r.end());
    return make_simplex(conv);
}

}  // namespace

TEST_CASE("segment counts") {
    auto seg = simplex_from_longs({{0}, {1}});
    for (long k = 1; k <= 5; ++k) {
        CHECK(count_points(seg, k, false) == k + 1);
        CHECK(count_points(seg, k, true) == k - 1);
    }
    CHECK(codegree_oracle(seg) == 2);
    auto data = ehrhart_polynomial(seg);
    CHECK(data.hstar == make_hstar({1}));
    CHECK(data.polynomial == std::vector<Rat>{Rat(1), Rat(1)});
}

TEST_CASE("stars-and-bars counts for conv(0, 2e_i)") {
    // |{x >= 0, sum x <= 2k}| = C(2k + d, d)
    auto k6 = make_simplex(golden_table_degree3()[5].vertices);   // d = 5
    auto k8 = make_simplex(golden_table_degree4()[18].vertices);  // d = 7
    CHECK(count_points(k6, 1, false) == binom(7, 5));   // 21
    CHECK(count_points(k8, 1, false) == binom(9, 7));   // 36
    CHECK(count_points(k6, 3, false) == binom(11, 5));
    CHECK(count_points(k8, 2, false) == binom(11, 7));
    // interior of k*conv(0, 2e_i): x >= 1, sum < 2k, i.e. C(2k - 1, d)
    CHECK(count_points(k6, 3, true) == binom(5, 5));  // the unique point
    CHECK(count_points(k8, 4, true) == binom(7, 7));
}

TEST_CASE("oracle h* for pinned simplices") {
    auto d31 = ehrhart_polynomial(make_simplex(golden_table_degree3()[0].vertices));
    CHECK(d31.hstar == make_hstar({1, 0, 0, 1}));

    auto example = ehrhart_polynomial(simplex_from_group(example_group_non_gorenstein()));
    CHECK(example.hstar == make_hstar({1, 1, 5, 1}));
}

TEST_CASE("codegree oracle on pinned simplices") {
    CHECK(codegree_oracle(make_simplex(golden_table_degree3()[0].vertices)) == 3);
    CHECK(codegree_oracle(make_simplex(golden_table_degree4()[18].vertices)) == 4);
}

TEST_CASE("triangle polynomial is exact") {
    auto triangle = simplex_from_longs({{0, 0}, {1, 0}, {0, 1}});
    auto data = ehrhart_polynomial(triangle);
    CHECK(data.polynomial == std::vector<Rat>{Rat(1), Rat(3, 2), Rat(1, 2)});
    CHECK(data.counts == std::vector<Int>{Int(3), Int(6), Int(10)});
}

TEST_CASE("budget exhaustion raises") {
    auto k6 = make_simplex(golden_table_degree3()[5].vertices);
    CHECK_THROWS_AS(count_points(k6, 6, false, 10), BudgetError);
}

TEST_CASE("oracle agrees with the group route on random simplices") {
    std::mt19937_64 rng(404);
    for (int iter = 0; iter < 120; ++iter) {
        auto simplex = random_simplex(rng, 3);
        auto data = ehrhart_polynomial(simplex);
        CHECK(data.hstar == hstar_from_group(group_of_simplex(simplex)));
        CHECK(data.hstar.value_at_one() == simplex.normalized_volume());
        // h*_1 = L(1) - (d+1) and h*_d = interior count of the simplex itself
        const std::size_t d = simplex.dim();
        Int h1 = data.hstar.coeffs.size() > 1 ? data.hstar.coeffs[1] : Int(0);
        CHECK(h1 == data.counts[0] - Int(static_cast<unsigned long>(d + 1)));
        Int hd = data.hstar.degree() == d ? data.hstar.coeffs[d] : Int(0);
        CHECK(hd == data.interior_counts[0]);
    }
}
