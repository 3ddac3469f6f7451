#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "latcode/codes.hpp"
#include "latcode/correspond.hpp"
#include "latcode/io.hpp"

using namespace latcode;
using namespace latcode::testing;

namespace {

SimplexGroup table_group(const TableRow& row) {
    return group_of_simplex(make_simplex(row.vertices));
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

}  // namespace

TEST_CASE("trivial group reconstructs to a unimodular simplex") {
    for (std::size_t n = 2; n <= 5; ++n) {
        auto trivial = SimplexGroup::from_elements(n, 1, {std::vector<Int>(n, Int(0))});
        auto simplex = simplex_from_group(trivial);
        CHECK(simplex.dim() == n - 1);
        CHECK(simplex.normalized_volume() == 1);
        CHECK(group_of_simplex(simplex) == trivial);
    }
}

TEST_CASE("order-2 group reconstructs to a volume-2 segment") {
    auto half = SimplexGroup::from_elements(2, 2, {{Int(0), Int(0)}, {Int(1), Int(1)}});
    auto simplex = simplex_from_group(half);
    CHECK(simplex.dim() == 1);
    CHECK(simplex.normalized_volume() == 2);
    CHECK(group_of_simplex(simplex) == half);
}

TEST_CASE("half of the even-weight code reconstructs the K6 class") {
    // generators of the full even-weight code of length 6
    std::vector<std::string> gens;
    for (int i = 0; i < 5; ++i) {
        std::string s(6, '0');
        s[i] = s[i + 1] = '1';
        gens.push_back(s);
    }
    auto group = code_to_group(BinaryCode::from_strings(6, gens));
    CHECK(group.order() == 32);
    auto simplex = simplex_from_group(group);
    CHECK(hstar_from_group(group_of_simplex(simplex)) == make_hstar({1, 15, 15, 1}));
    CHECK(groups_equivalent(group, table_group(golden_table_degree3()[5])));
}

TEST_CASE("canonical form is permutation invariant and idempotent") {
    std::mt19937_64 rng(61);
    auto example = example_group_non_gorenstein();
    // spec example: swapping two coordinates leaves the canonical form alone
    CHECK(canonical_group(example) ==
          canonical_group(permute_group(example, {1, 0, 2, 3, 4, 5})));
    for (int iter = 0; iter < 100; ++iter) {
        auto group = group_of_simplex(random_simplex(rng, 3));
        auto perm = random_permutation(rng, group.length());
        auto permuted = permute_group(group, perm);
        CHECK(canonical_group(group) == canonical_group(permuted));
        // idempotence: canonicalizing the canonical element list changes nothing
        auto canon = canonical_group(group);
        auto again = canonical_group(
            SimplexGroup::from_elements(canon.length, canon.q, canon.elements));
        CHECK(canon == again);
    }
}

TEST_CASE("equal h* does not imply equivalence: K3 vs 3K2") {
    auto k3 = table_group(golden_table_degree3()[2]);
    auto threek2 = table_group(golden_table_degree3()[3]);
    CHECK(hstar_from_group(k3) == hstar_from_group(threek2));
    CHECK_FALSE(groups_equivalent(k3, threek2));
}

TEST_CASE("table K4+K2 row matches the K4|K2 block code") {
    auto code = BinaryCode::from_strings(6, {"110000", "011000", "001100", "000011"});
    CHECK(is_even(code));
    CHECK(is_self_complementary(code));
    CHECK(groups_equivalent(code_to_group(code), table_group(golden_table_degree3()[4])));
}

TEST_CASE("equivalence is an equivalence relation") {
    std::mt19937_64 rng(62);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = group_of_simplex(random_simplex(rng, 3));
        auto a = permute_group(g, random_permutation(rng, g.length()));
        auto b = permute_group(g, random_permutation(rng, g.length()));
        CHECK(groups_equivalent(g, g));
        CHECK(groups_equivalent(a, b));
        CHECK(groups_equivalent(b, a));
    }
    auto g1 = group_of_simplex(make_simplex(golden_table_degree3()[0].vertices));
    auto g2 = group_of_simplex(make_simplex(golden_table_degree4()[0].vertices));
    CHECK_THROWS_AS(groups_equivalent(g1, g2), DimensionError);
}

TEST_CASE("round trip over random simplices") {
    std::mt19937_64 rng(63);
    for (int iter = 0; iter < 200; ++iter) {
        auto group = group_of_simplex(random_simplex(rng, 4));
        auto rebuilt = group_of_simplex(simplex_from_group(group));
        CHECK(rebuilt == group);
    }
}

TEST_CASE("reconstruction validates closure") {
    // {0, (1/2, 1/2)} with a stray non-closed extra element
    CHECK_THROWS_AS(simplex_from_group(SimplexGroup::from_elements(
                        2, 4, {{Int(0), Int(0)}, {Int(1), Int(1)}})),
                    Error);
}
