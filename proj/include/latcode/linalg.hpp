#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <gmpxx.h>

#include "latcode/errors.hpp"

namespace latcode {

// All arithmetic in this library is exact. Int/Rat are the only number
// types that ever touch a mathematical value.
using Int = mpz_class;
using Rat = mpq_class;

// Dense row-major integer matrix. Small (d <= 10 or so) and exact; no
// attempt at sparsity or fixed-width fast paths.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    // row i += c * row j / col i += c * col j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& c);
    void add_col_multiple(std::size_t i, std::size_t j, const Int& c);

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Exact determinant by fraction-free Bareiss elimination.
Int determinant(const IntMatrix& a);

// u * a = h with u unimodular and h in row-style Hermite normal form:
// pivots positive, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

// u * a * v = s with s diagonal, s_11 | s_22 | ... and all diagonal
// entries nonnegative; u, v unimodular.
struct SmithDecomposition {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;

    std::vector<Int> elementary_divisors() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// det and adjugate together: a * adj = adj * a = det * I.
struct Adjugate {
    Int det;
    IntMatrix adj;
};

Adjugate adjugate(const IntMatrix& a);

// Solves a * x = rhs[j] for every right-hand side column, over the
// rationals, for a consistent system with a unique solution (the system may
// be overdetermined). Throws ConsistencyError otherwise.
std::vector<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<std::vector<Rat>>& rhs_cols);

// floor / ceil of a/b for exact integers, b != 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
// a mod m reduced into [0, m), m > 0.
Int mod_floor(const Int& a, const Int& m);

}  // namespace latcode
