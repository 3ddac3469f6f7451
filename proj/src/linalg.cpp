#include "latcode/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace latcode {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix must have at least one row and column");
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw DimensionError("matrix must have at least one row and column");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Int> IntMatrix::row(std::size_t i) const {
    return std::vector<Int>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int determinant(const IntMatrix& input) {
    if (!input.is_square()) throw DimensionError("determinant of a non-square matrix");
    IntMatrix a = input;
    const std::size_t n = a.rows();
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                // division is exact in Bareiss elimination
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
    HermiteForm hf{a, IntMatrix::identity(a.rows())};
    IntMatrix& h = hf.h;
    IntMatrix& u = hf.u;
    const std::size_t m = h.rows(), n = h.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        // gcd-reduce column c below row r until a single nonzero remains
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                if (best == m || mpz_cmpabs(h.at(i, c).get_mpz_t(), h.at(best, c).get_mpz_t()) < 0) best = i;
            }
            if (best == m) break;  // column is zero from row r down
            h.swap_rows(best, r);
            u.swap_rows(best, r);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (h.at(i, c) == 0) continue;
                Int q = floor_div(h.at(i, c), h.at(r, c));
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            h.add_row_multiple(i, r, -q);
            u.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    return hf;
}

std::vector<Int> SmithDecomposition::elementary_divisors() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i)
        if (s.at(i, i) != 0) d.push_back(s.at(i, i));
    return d;
}

namespace {

// Smallest nonzero |entry| at position >= (t, t); false if that block is zero.
bool find_pivot(const IntMatrix& s, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s.at(i, j) == 0) continue;
            if (!found || mpz_cmpabs(s.at(i, j).get_mpz_t(), s.at(pi, pj).get_mpz_t()) < 0) {
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    SmithDecomposition d{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
    IntMatrix& s = d.s;
    IntMatrix& u = d.u;
    IntMatrix& v = d.v;
    const std::size_t m = s.rows(), n = s.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(s, t, pi, pj)) break;  // remaining block zero: done
            s.swap_rows(pi, t);
            u.swap_rows(pi, t);
            s.swap_cols(pj, t);
            v.swap_cols(pj, t);
            if (s.at(t, t) < 0) {
                s.negate_row(t);
                u.negate_row(t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = floor_div(s.at(i, t), s.at(t, t));
                s.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = floor_div(s.at(t, j), s.at(t, t));
                s.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // smaller residues appeared: re-pivot
            // enforce the divisibility chain: pivot must divide the whole block
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        s.add_row_multiple(t, i, 1);
                        u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
    }
    return d;
}

Adjugate adjugate(const IntMatrix& a) {
    if (!a.is_square()) throw DimensionError("adjugate of a non-square matrix");
    const std::size_t n = a.rows();
    Int det = determinant(a);
    if (det == 0) throw DegeneracyError("adjugate of a singular matrix");
    // rational inverse, then adj = det * a^{-1}
    std::vector<std::vector<Rat>> lhs(n, std::vector<Rat>(n));
    std::vector<std::vector<Rat>> rhs(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i][i] = 1;
        for (std::size_t j = 0; j < n; ++j) lhs[i][j] = Rat(a.at(i, j));
    }
    auto inv_cols = solve_columns(lhs, rhs);
    Adjugate out{det, IntMatrix(n, n)};
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Rat e = inv_cols[j][i] * Rat(det);
            e.canonicalize();
            if (e.get_den() != 1) throw ConsistencyError("adjugate entry not integral");
            out.adj.at(i, j) = e.get_num();
        }
    return out;
}

std::vector<std::vector<Rat>> solve_columns(const std::vector<std::vector<Rat>>& a,
                                            const std::vector<std::vector<Rat>>& rhs_cols) {
    const std::size_t m = a.size();
    if (m == 0) throw DimensionError("empty system");
    const std::size_t n = a[0].size();
    const std::size_t w = rhs_cols.size();
    // augmented matrix [a | rhs columns]
    std::vector<std::vector<Rat>> aug(m, std::vector<Rat>(n + w));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw DimensionError("ragged system");
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        for (std::size_t k = 0; k < w; ++k) {
            if (rhs_cols[k].size() != m) throw DimensionError("rhs length mismatch");
            aug[i][n + k] = rhs_cols[k][i];
        }
    }
    std::vector<std::size_t> pivot_of_col(n, m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug[p][c] == 0) ++p;
        if (p == m) continue;
        std::swap(aug[p], aug[r]);
        Rat inv = 1 / aug[r][c];
        for (std::size_t j = c; j < n + w; ++j) aug[r][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug[i][c] == 0) continue;
            Rat f = aug[i][c];
            for (std::size_t j = c; j < n + w; ++j) aug[i][j] -= f * aug[r][j];
        }
        pivot_of_col[c] = r;
        ++r;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] == m) throw ConsistencyError("system is underdetermined");
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t k = 0; k < w; ++k)
            if (aug[i][n + k] != 0) throw ConsistencyError("system is inconsistent");
    std::vector<std::vector<Rat>> out(w, std::vector<Rat>(n));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k < w; ++k) out[k][c] = aug[pivot_of_col[c]][n + k];
    return out;
}

}  // namespace latcode
