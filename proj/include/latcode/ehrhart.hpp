#pragma once

#include <vector>

#include "latcode/simplex.hpp"

namespace latcode {

inline constexpr unsigned long long kDefaultEnumerationBudget = 1'000'000'000ULL;

// Exact lattice-point counter for dilates of a fixed simplex, straight from
// the facet description. The facet inequalities are the columns of the
// sign-adjusted adjugate of the vertex matrix; a Fourier-Motzkin elimination
// chain turns them into exact per-coordinate bounds, so the recursive scan
// only ever visits prefixes that extend to a point of the dilate. The chain
// keeps the dilate symbolic and serves every k and both the closed and the
// open (interior) case.
class PointCounter {
public:
    explicit PointCounter(const LatticeSimplex& simplex);

    /// |k*Delta ∩ Z^d| (interior = false) or |int(k*Delta) ∩ Z^d|.
    Int count(const Int& dilate, bool interior,
              unsigned long long budget = kDefaultEnumerationBudget) const;

    /// Collects points instead of counting; stops after max_points + 1
    /// points so callers can detect "more than expected" cheaply.
    std::vector<std::vector<Int>> collect(const Int& dilate, bool interior, std::size_t max_points,
                                          unsigned long long budget = kDefaultEnumerationBudget) const;

    std::size_t dim() const { return dim_; }

private:
    // sum_j coeff[j] * y_j + k_coeff * dilate  >= 0   (> 0 when interior)
    struct Row {
        std::vector<Int> coeff;
        Int k_coeff;
        bool operator<(const Row& o) const;
    };

    std::size_t dim_;
    // levels_[j]: constraints on y_0..y_j; rows with coeff[j] != 0 bound y_j
    std::vector<std::vector<Row>> levels_;

    bool bounds_at_level(std::size_t level, const std::vector<Int>& prefix, const Int& dilate,
                         bool interior, Int& lo, Int& hi) const;
    template <typename Leaf>
    void scan(const Int& dilate, bool interior, unsigned long long budget, Leaf&& leaf) const;
};

Int count_points(const LatticeSimplex& simplex, const Int& dilate, bool interior,
                 unsigned long long budget = kDefaultEnumerationBudget);

// Counts for the first d+1 dilates together with the interpolated Ehrhart
// polynomial and the h* coefficients extracted from it.
struct EhrhartData {
    std::size_t dim;
    std::vector<Int> counts;           // L(1), ..., L(d+1)
    std::vector<Int> interior_counts;  // L_int(1), ..., L_int(d+1)
    std::vector<Rat> polynomial;       // L(k) = sum polynomial[i] * k^i, degree d
    HStarPolynomial hstar;
};

EhrhartData ehrhart_polynomial(const LatticeSimplex& simplex,
                               unsigned long long budget = kDefaultEnumerationBudget);

/// Smallest k >= 1 with int(k*Delta) containing a lattice point.
Int codegree_oracle(const LatticeSimplex& simplex,
                    unsigned long long budget = kDefaultEnumerationBudget);

}  // namespace latcode
