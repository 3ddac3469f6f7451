#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latcode/linalg.hpp"

namespace latcode {

// A point of [0,1)^n with rational coordinates num[i]/q, stored over a
// common denominator q >= 1 with 0 <= num[i] < q.
struct GroupElement {
    Int q;
    std::vector<Int> num;

    std::size_t length() const { return num.size(); }
    bool is_zero() const;
    /// Coordinate sum; throws IntegralityError when it is not an integer.
    Int height() const;
    GroupElement add(const GroupElement& other) const;
    GroupElement negate() const;
    /// Number of nonzero coordinates.
    std::size_t support_size() const;
    /// True iff every coordinate is 0 or 1/2.
    bool is_half_integral() const;

    bool operator==(const GroupElement& other) const { return q == other.q && num == other.num; }
    bool operator<(const GroupElement& other) const;

    std::string str() const;
};

// The finite abelian group associated with a lattice simplex: a set of
// points of [0,1)^{d+1}, closed under coordinatewise addition mod 1, with
// integral coordinate sums. Elements are stored sorted, over the group
// exponent as common denominator.
class SimplexGroup {
public:
    // Normalizes the denominator to the group exponent and sorts.
    // Does not check closure; see verify_closed().
    static SimplexGroup from_elements(std::size_t length, const Int& q,
                                      std::vector<std::vector<Int>> numerators);

    std::size_t length() const { return length_; }
    const Int& denominator() const { return q_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }

    bool contains(const GroupElement& x) const;
    /// Throws ClosureError / IntegralityError if this is not a valid group.
    void verify_closed() const;

    bool operator==(const SimplexGroup& other) const {
        return length_ == other.length_ && q_ == other.q_ && elements_ == other.elements_;
    }

private:
    std::size_t length_ = 0;
    Int q_ = 1;
    std::vector<GroupElement> elements_;
};

// Full-dimensional lattice simplex: d+1 ordered integer vertices in Z^d.
struct LatticeSimplex {
    std::vector<std::vector<Int>> vertices;

    std::size_t dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
    /// (d+1) x (d+1) matrix with rows (v_i, 1).
    IntMatrix homogeneous_matrix() const;
    /// |det| of the homogeneous matrix; throws DegeneracyError if zero.
    Int normalized_volume() const;
};

LatticeSimplex make_simplex(const std::vector<std::vector<Int>>& vertices);

// h*-polynomial: nonnegative integer coefficients, h*_0 = 1,
// value at 1 = normalized volume.
struct HStarPolynomial {
    std::vector<Int> coeffs;  // trailing zeros trimmed

    std::size_t degree() const { return coeffs.size() - 1; }
    Int value_at_one() const;
    bool operator==(const HStarPolynomial& other) const { return coeffs == other.coeffs; }
    std::string str() const;
};

HStarPolynomial make_hstar(std::vector<Int> coeffs);

// The unique interior lattice point of r*Delta with its barycentric
// coefficients: p = sum lambda_i v_i, sum lambda_i = r, lambda_i > 0.
struct InteriorPointData {
    Int codegree;
    std::vector<Int> point;
    std::vector<Rat> lambda;
    // index j with lambda_j = 1, if any (pyramid witness)
    std::optional<std::size_t> unit_coefficient;

    bool all_lambda_in_open_unit_interval() const;
};

/// The group { x in [0,1)^{d+1} : sum x_i (v_i, 1) integral }.
SimplexGroup group_of_simplex(const LatticeSimplex& simplex);

/// Coefficient i counts group elements of height i.
HStarPolynomial hstar_from_group(const SimplexGroup& group);

/// Smallest coordinate index that vanishes on the whole group, if any.
/// Nonempty exactly when the simplex is a lattice pyramid.
std::optional<std::size_t> is_pyramid(const SimplexGroup& group);

/// conv(Delta x {0}, e_{d+1}); the apex is appended as the last vertex.
LatticeSimplex pyramid(const LatticeSimplex& simplex);

/// Gorenstein <=> h* palindromic.
bool is_gorenstein(const HStarPolynomial& h);

struct DegreeCodegree {
    std::size_t degree;
    std::size_t codegree;
};

/// (s, r) with s = deg h* and r = d + 1 - s.
DegreeCodegree degree_and_codegree(const HStarPolynomial& h, std::size_t dim);

/// Locates the interior point of r*Delta and solves for its barycentric
/// coefficients; throws PreconditionError unless the point is unique.
InteriorPointData interior_point_data(const LatticeSimplex& simplex, const Int& r);

/// True iff the unique height-s element has full support. s = 0 is
/// vacuously true; otherwise a missing or non-unique top element throws.
bool top_element_support_check(const SimplexGroup& group, std::size_t s);

}  // namespace latcode
