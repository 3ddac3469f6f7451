#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latcode/simplex.hpp"

namespace latcode {

// Binary linear code of length n <= 16. Codewords are bit masks with bit j
// holding coordinate j; the full codeword set is materialized.
class BinaryCode {
public:
    static BinaryCode from_generators(std::size_t length, std::vector<std::uint16_t> generators);
    /// Rows as 0/1 strings, leftmost character = coordinate 0.
    static BinaryCode from_strings(std::size_t length, const std::vector<std::string>& rows);

    std::size_t length() const { return length_; }
    std::size_t dim() const { return generators_.size(); }
    const std::vector<std::uint16_t>& generators() const { return generators_; }
    const std::vector<std::uint16_t>& codewords() const { return codewords_; }
    std::vector<std::string> generator_strings() const;
    bool contains(std::uint16_t word) const;

    bool operator==(const BinaryCode& other) const {
        return length_ == other.length_ && codewords_ == other.codewords_;
    }

private:
    std::size_t length_ = 0;
    std::vector<std::uint16_t> generators_;  // reduced row echelon form
    std::vector<std::uint16_t> codewords_;   // all 2^k words, ascending
};

struct WeightDistribution {
    std::vector<unsigned long long> counts;  // A_0, ..., A_n

    bool operator==(const WeightDistribution& other) const { return counts == other.counts; }
};

WeightDistribution weight_distribution(const BinaryCode& code);

/// Every codeword has even Hamming weight.
bool is_even(const BinaryCode& code);
/// The all-one vector is a codeword.
bool is_self_complementary(const BinaryCode& code);

/// Half-scaled codewords as a group over denominator 2; requires an even
/// code so that heights are integral.
SimplexGroup code_to_group(const BinaryCode& code);

/// Doubles a group all of whose coordinates lie in {0, 1/2} back into a
/// code; throws IntegralityError on any other coordinate.
BinaryCode group_to_code(const SimplexGroup& group);

/// h*(Delta, t) = sum over codewords of t^{wt/2}; requires an even code.
HStarPolynomial hstar_from_code(const BinaryCode& code);

// Canonical representative of a code under coordinate permutation.
struct CanonicalCode {
    std::size_t length;
    std::vector<std::uint16_t> words;       // canonical sorted codeword list
    std::vector<std::uint16_t> generators;  // echelon form of the canonical words

    bool operator==(const CanonicalCode& other) const {
        return length == other.length && words == other.words;
    }
    bool operator<(const CanonicalCode& other) const {
        if (length != other.length) return length < other.length;
        return words < other.words;
    }
};

CanonicalCode canonical_code(const BinaryCode& code);

/// All even self-complementary codes of the given even length (<= 10), one
/// representative per coordinate-permutation class. Codes with 1 in C are
/// exactly the lifts of subspaces of E_n / <1>, which are enumerated as
/// reduced-row-echelon generator matrices over F_2.
std::vector<BinaryCode> enumerate_escc(std::size_t length);

}  // namespace latcode
