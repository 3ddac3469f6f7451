#pragma once

#include <random>
#include <set>
#include <vector>

#include "latcode/simplex.hpp"

namespace latcode::testing {

// Independent membership oracle for the associated group: walks the full
// grid of candidate vectors with denominator |det| and tests the defining
// condition sum x_i (v_i, 1) in Z^{d+1} directly. Exponential in d, so only
// for small simplices.
inline std::set<std::vector<Rat>> brute_force_group(const LatticeSimplex& simplex) {
    const std::size_t n = simplex.dim() + 1;
    const Int det = abs(determinant(simplex.homogeneous_matrix()));
    const unsigned long d_ul = det.get_ui();
    std::set<std::vector<Rat>> members;
    std::vector<unsigned long> counter(n, 0);
    for (;;) {
        // test sum x_i (v_i, 1) integral with x_i = counter[i]/det
        bool member = true;
        for (std::size_t col = 0; col <= simplex.dim() && member; ++col) {
            Int sum = 0;
            for (std::size_t i = 0; i < n; ++i) {
                Int coord = col < simplex.dim() ? simplex.vertices[i][col] : Int(1);
                sum += Int(counter[i]) * coord;
            }
            member = sum % det == 0;
        }
        if (member) {
            std::vector<Rat> x(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = Rat(Int(counter[i]), det);
                x[i].canonicalize();
            }
            members.insert(std::move(x));
        }
        std::size_t pos = 0;
        while (pos < n && ++counter[pos] == d_ul) counter[pos++] = 0;
        if (pos == n) break;
    }
    return members;
}

inline std::set<std::vector<Rat>> group_as_rationals(const SimplexGroup& group) {
    std::set<std::vector<Rat>> out;
    for (const auto& el : group.elements()) {
        std::vector<Rat> x(el.num.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = Rat(el.num[i], el.q);
            x[i].canonicalize();
        }
        out.insert(std::move(x));
    }
    return out;
}

// Random full-dimensional simplex with small entries and bounded volume.
inline LatticeSimplex random_simplex(std::mt19937_64& rng, std::size_t max_dim = 4,
                                     long max_entry = 3, long max_volume = 60) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    for (;;) {
        const std::size_t d = dim_dist(rng);
        std::uniform_int_distribution<long> entry(-max_entry, max_entry);
        std::vector<std::vector<Int>> vertices(d + 1, std::vector<Int>(d));
        for (auto& v : vertices)
            for (auto& c : v) c = entry(rng);
        LatticeSimplex s{vertices};
        Int det = determinant(s.homogeneous_matrix());
        if (det != 0 && abs(det) <= max_volume) return s;
    }
}

inline Int binom(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Closes a generating set under addition mod 1 and packages the result.
inline SimplexGroup close_under_addition(std::size_t length, const Int& q,
                                         const std::vector<std::vector<Int>>& generators) {
    std::set<std::vector<Int>> seen;
    seen.insert(std::vector<Int>(length, Int(0)));
    std::vector<std::vector<Int>> work(seen.begin(), seen.end());
    while (!work.empty()) {
        auto x = work.back();
        work.pop_back();
        for (const auto& g : generators) {
            std::vector<Int> y(length);
            for (std::size_t i = 0; i < length; ++i) y[i] = mod_floor(x[i] + g[i], q);
            if (seen.insert(y).second) work.push_back(std::move(y));
        }
    }
    return SimplexGroup::from_elements(length, q,
                                       std::vector<std::vector<Int>>(seen.begin(), seen.end()));
}

// The 8-element non-Gorenstein demonstration group generated by
// (3/4, 3/4, 1/2, 1/2, 1/2, 0) and (0, 1/2, 0, 1/2, 1/2, 1/2).
inline SimplexGroup example_group_non_gorenstein() {
    return close_under_addition(6, 4,
                                {{3, 3, 2, 2, 2, 0}, {0, 2, 0, 2, 2, 2}});
}

inline SimplexGroup permute_group(const SimplexGroup& group, const std::vector<std::size_t>& perm) {
    std::vector<std::vector<Int>> numerators;
    for (const auto& el : group.elements()) {
        std::vector<Int> num(el.num.size());
        for (std::size_t i = 0; i < perm.size(); ++i) num[i] = el.num[perm[i]];
        numerators.push_back(std::move(num));
    }
    return SimplexGroup::from_elements(group.length(), group.denominator(), std::move(numerators));
}

}  // namespace latcode::testing
