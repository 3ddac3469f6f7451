#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "latcode/codes.hpp"
#include "latcode/correspond.hpp"

using namespace latcode;
using namespace latcode::testing;

namespace {

BinaryCode full_even_weight_code(std::size_t n) {
    std::vector<std::uint16_t> gens;
    for (std::size_t i = 0; i + 1 < n; ++i)
        gens.push_back(static_cast<std::uint16_t>((1u << i) | (1u << (i + 1))));
    return BinaryCode::from_generators(n, std::move(gens));
}

BinaryCode ones_code(std::size_t n) {
    return BinaryCode::from_generators(n, {static_cast<std::uint16_t>((1u << n) - 1)});
}

BinaryCode random_even_code(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> count(0, 4);
    std::uniform_int_distribution<std::uint16_t> word(0, static_cast<std::uint16_t>((1u << n) - 1));
    std::vector<std::uint16_t> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        std::uint16_t w = word(rng);
        if (std::popcount(w) % 2) w ^= 1u;  // force even weight
        gens.push_back(w);
    }
    return BinaryCode::from_generators(n, std::move(gens));
}

}  // namespace

TEST_CASE("weight distributions") {
    auto zero = BinaryCode::from_generators(6, {});
    auto wd = weight_distribution(zero);
    CHECK(wd.counts == std::vector<unsigned long long>{1, 0, 0, 0, 0, 0, 0});

    wd = weight_distribution(ones_code(6));
    CHECK(wd.counts == std::vector<unsigned long long>{1, 0, 0, 0, 0, 0, 1});

    wd = weight_distribution(full_even_weight_code(8));
    CHECK(wd.counts ==
          std::vector<unsigned long long>{1, 0, 28, 0, 70, 0, 28, 0, 1});
}

TEST_CASE("even and self-complementary predicates") {
    CHECK(is_even(ones_code(6)));
    CHECK(is_self_complementary(ones_code(6)));
    auto odd = BinaryCode::from_strings(6, {"111000"});
    CHECK_FALSE(is_even(odd));
    CHECK(is_even(full_even_weight_code(8)));
    CHECK(is_self_complementary(full_even_weight_code(8)));
}

TEST_CASE("code to group") {
    auto g = code_to_group(ones_code(2));
    CHECK(g.order() == 2);
    CHECK(g.denominator() == 2);
    CHECK(hstar_from_group(code_to_group(ones_code(6))) == make_hstar({1, 0, 0, 1}));
    auto k6 = code_to_group(full_even_weight_code(6));
    CHECK(k6.order() == 32);
    CHECK(hstar_from_group(k6) == make_hstar({1, 15, 15, 1}));
    CHECK_THROWS_AS(code_to_group(BinaryCode::from_strings(6, {"111000"})), IntegralityError);
}

TEST_CASE("group to code") {
    auto half = SimplexGroup::from_elements(2, 2, {{Int(0), Int(0)}, {Int(1), Int(1)}});
    auto code = group_to_code(half);
    CHECK(code.codewords() == std::vector<std::uint16_t>{0, 3});
    CHECK_THROWS_AS(group_to_code(example_group_non_gorenstein()), IntegralityError);
}

TEST_CASE("hstar from code") {
    CHECK(hstar_from_code(ones_code(8)) == make_hstar({1, 0, 0, 0, 1}));
    CHECK(hstar_from_code(full_even_weight_code(6)) == make_hstar({1, 15, 15, 1}));
    CHECK(hstar_from_code(ones_code(2)) == make_hstar({1, 1}));
    CHECK_THROWS_AS(hstar_from_code(BinaryCode::from_strings(4, {"1110"})), IntegralityError);
}

TEST_CASE("canonical code separates K3 from 3K2 and ignores permutations") {
    auto threek2 = BinaryCode::from_strings(6, {"110000", "001100", "000011"});
    auto k3 = BinaryCode::from_strings(6, {"110000", "011000", "111111"});
    CHECK(hstar_from_code(threek2) == hstar_from_code(k3));
    CHECK_FALSE(canonical_code(threek2) == canonical_code(k3));

    std::mt19937_64 rng(71);
    for (int iter = 0; iter < 200; ++iter) {
        auto code = random_even_code(rng, 6);
        std::vector<std::size_t> perm(6);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::uint16_t> permuted;
        for (std::uint16_t w : code.codewords()) {
            std::uint16_t v = 0;
            for (std::size_t j = 0; j < 6; ++j)
                if (w & (1u << perm[j])) v |= static_cast<std::uint16_t>(1u << j);
            permuted.push_back(v);
        }
        auto shuffled = BinaryCode::from_generators(6, std::move(permuted));
        CHECK(canonical_code(code) == canonical_code(shuffled));
    }

    auto zero = BinaryCode::from_generators(4, {});
    CHECK(canonical_code(zero).words == std::vector<std::uint16_t>{0});
}

TEST_CASE("code and group round trips") {
    std::mt19937_64 rng(72);
    for (int iter = 0; iter < 300; ++iter) {
        std::uniform_int_distribution<std::size_t> len(2, 8);
        auto code = random_even_code(rng, len(rng));
        auto group = code_to_group(code);
        CHECK(group_to_code(group) == code);
        CHECK(code_to_group(group_to_code(group)) == group);
        CHECK(hstar_from_code(code) == hstar_from_group(group));
    }
}

TEST_CASE("enumeration of even self-complementary codes") {
    CHECK(enumerate_escc(2).size() == 1);
    CHECK(enumerate_escc(4).size() == 3);
    CHECK(enumerate_escc(6).size() == 6);
    CHECK(enumerate_escc(8).size() == 19);
    for (const auto& code : enumerate_escc(8)) {
        CHECK(is_even(code));
        CHECK(is_self_complementary(code));
        auto wd = weight_distribution(code);
        for (std::size_t w = 0; w <= 8; ++w) CHECK(wd.counts[w] == wd.counts[8 - w]);
    }
    CHECK_THROWS_AS(enumerate_escc(5), RangeError);
    CHECK_THROWS_AS(enumerate_escc(12), RangeError);
}
