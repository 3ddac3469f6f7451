#pragma once

#include <string>
#include <vector>

#include "latcode/simplex.hpp"

namespace latcode {

// Permutation-invariant fingerprint of a SimplexGroup: the canonical sorted
// numerator list. Two groups have equal canonical forms iff they coincide up
// to a permutation of coordinates.
struct CanonicalGroupForm {
    std::size_t length;
    Int q;
    std::vector<std::vector<Int>> elements;

    bool operator==(const CanonicalGroupForm& other) const {
        return length == other.length && q == other.q && elements == other.elements;
    }
    bool operator<(const CanonicalGroupForm& other) const;
};

CanonicalGroupForm canonical_group(const SimplexGroup& group);

/// Equality of canonical forms; lengths must match.
bool groups_equivalent(const SimplexGroup& a, const SimplexGroup& b);

// Inverse of group_of_simplex: builds a concrete vertex representative whose
// associated group is exactly the given one (round-trip identity, not merely
// equivalence).
//
// Construction: let L be the lattice spanned by Z^{d+1} and the group
// elements. The coordinate-sum functional is integral on L and hits 1, so L
// has a basis b_0, ..., b_d with sum(b_0) = 1 and sum(b_j) = 0 for j >= 1
// (Hermite form of the scaled generators, then a gcd pass on the row sums).
// Writing e_i - b_0 = sum_j c_ij b_j, the vertex v_i is (c_i1, ..., c_id);
// in that basis x*A has rows (v_i, 1), which recovers the defining
// membership condition.
LatticeSimplex simplex_from_group(const SimplexGroup& group);

}  // namespace latcode
