#include "latcode/correspond.hpp"

#include <algorithm>

#include "latcode/canonical.hpp"

namespace latcode {

bool CanonicalGroupForm::operator<(const CanonicalGroupForm& other) const {
    if (length != other.length) return length < other.length;
    if (q != other.q) return q < other.q;
    return elements < other.elements;
}

CanonicalGroupForm canonical_group(const SimplexGroup& group) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(group.order());
    for (const auto& el : group.elements()) rows.push_back(el.num);
    auto canon = detail::canonical_columns<Int>(rows);
    return CanonicalGroupForm{group.length(), group.denominator(), std::move(canon.rows)};
}

bool groups_equivalent(const SimplexGroup& a, const SimplexGroup& b) {
    if (a.length() != b.length()) throw DimensionError("groups live in different lengths");
    return canonical_group(a) == canonical_group(b);
}

LatticeSimplex simplex_from_group(const SimplexGroup& group) {
    group.verify_closed();
    const std::size_t n = group.length();
    if (n < 2) throw DimensionError("group length must be at least 2 (d >= 1)");
    const Int& q = group.denominator();

    // rows spanning q*L: q*identity plus the element numerators
    std::vector<std::vector<Int>> span;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> row(n, Int(0));
        row[i] = q;
        span.push_back(std::move(row));
    }
    for (const auto& el : group.elements())
        if (!el.is_zero()) span.push_back(el.num);

    auto hnf = hermite_normal_form(IntMatrix::from_rows(span));
    std::vector<std::vector<Int>> basis;  // basis of q*L
    for (std::size_t i = 0; i < n; ++i) basis.push_back(hnf.h.row(i));

    // row sums are q * (height on L); make them (q, 0, ..., 0)
    std::vector<Int> heights(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int sum = 0;
        for (const Int& v : basis[i]) sum += v;
        if (sum % q != 0) throw IntegralityError("lattice basis row has non-integral height");
        heights[i] = sum / q;
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (heights[i] == 0) continue;
        Int g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), heights[0].get_mpz_t(),
                   heights[i].get_mpz_t());
        std::vector<Int> r0(n), ri(n);
        Int a = heights[0] / g, b = heights[i] / g;
        for (std::size_t j = 0; j < n; ++j) {
            r0[j] = x * basis[0][j] + y * basis[i][j];
            ri[j] = -b * basis[0][j] + a * basis[i][j];
        }
        basis[0] = std::move(r0);
        basis[i] = std::move(ri);
        heights[0] = g;
        heights[i] = 0;
    }
    if (heights[0] != 1)
        throw ConsistencyError("height functional is not surjective on the lattice");

    // e_i - b_0 lies in the span of b_1, ..., b_{d}; its coefficients are the
    // coordinates of vertex v_i
    std::vector<std::vector<Rat>> lhs(n, std::vector<Rat>(n - 1));
    for (std::size_t coord = 0; coord < n; ++coord)
        for (std::size_t j = 1; j < n; ++j) lhs[coord][j - 1] = Rat(basis[j][coord]);
    std::vector<std::vector<Rat>> rhs(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t coord = 0; coord < n; ++coord) {
            // q*(e_i - b_0), matching the q-scaled basis rows on the left
            Int v = -basis[0][coord];
            if (coord == i) v += q;
            rhs[i][coord] = Rat(v);
        }
    auto coeffs = solve_columns(lhs, rhs);

    std::vector<std::vector<Int>> vertices(n, std::vector<Int>(n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Rat c = coeffs[i][j];
            c.canonicalize();
            if (c.get_den() != 1)
                throw ConsistencyError("vertex coordinate is not integral");
            vertices[i][j] = c.get_num();
        }
    return make_simplex(vertices);
}

}  // namespace latcode
