#include "latcode/codes.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "latcode/canonical.hpp"

namespace latcode {

namespace {

// reduced row echelon form over F_2; returns nonzero rows sorted by pivot
std::vector<std::uint16_t> rref(std::vector<std::uint16_t> rows, std::size_t length) {
    std::vector<std::uint16_t> out;
    for (std::size_t col = 0; col < length; ++col) {
        const std::uint16_t bit = static_cast<std::uint16_t>(1u << col);
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::uint16_t p = rows[pivot];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (auto& r : rows)
            if (r & bit) r ^= p;
        for (auto& r : out)
            if (r & bit) r ^= p;
        out.push_back(p);
    }
    return out;
}

std::vector<std::uint16_t> span_of(const std::vector<std::uint16_t>& gens) {
    std::vector<std::uint16_t> words{0};
    for (std::uint16_t g : gens) {
        const std::size_t sz = words.size();
        for (std::size_t i = 0; i < sz; ++i) words.push_back(words[i] ^ g);
    }
    std::sort(words.begin(), words.end());
    return words;
}

}  // namespace

BinaryCode BinaryCode::from_generators(std::size_t length, std::vector<std::uint16_t> generators) {
    if (length == 0 || length > 16) throw RangeError("code length must be in 1..16");
    for (std::uint16_t g : generators)
        if (g >> length) throw RangeError("generator has bits beyond the code length");
    BinaryCode code;
    code.length_ = length;
    code.generators_ = rref(std::move(generators), length);
    code.codewords_ = span_of(code.generators_);
    return code;
}

BinaryCode BinaryCode::from_strings(std::size_t length, const std::vector<std::string>& rows) {
    std::vector<std::uint16_t> gens;
    for (const auto& row : rows) {
        if (row.size() != length) throw DimensionError("generator string length mismatch");
        std::uint16_t g = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] == '1')
                g |= static_cast<std::uint16_t>(1u << j);
            else if (row[j] != '0')
                throw ParseError(1, "generator rows must be 0/1 strings");
        }
        gens.push_back(g);
    }
    return from_generators(length, std::move(gens));
}

std::vector<std::string> BinaryCode::generator_strings() const {
    std::vector<std::string> out;
    for (std::uint16_t g : generators_) {
        std::string s(length_, '0');
        for (std::size_t j = 0; j < length_; ++j)
            if (g & (1u << j)) s[j] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

bool BinaryCode::contains(std::uint16_t word) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), word);
}

WeightDistribution weight_distribution(const BinaryCode& code) {
    WeightDistribution wd;
    wd.counts.assign(code.length() + 1, 0);
    for (std::uint16_t w : code.codewords()) ++wd.counts[std::popcount(w)];
    return wd;
}

bool is_even(const BinaryCode& code) {
    return std::all_of(code.codewords().begin(), code.codewords().end(),
                       [](std::uint16_t w) { return std::popcount(w) % 2 == 0; });
}

bool is_self_complementary(const BinaryCode& code) {
    const std::uint16_t ones = static_cast<std::uint16_t>((1u << code.length()) - 1);
    return code.contains(ones);
}

SimplexGroup code_to_group(const BinaryCode& code) {
    if (!is_even(code))
        throw IntegralityError("code has an odd-weight codeword; half-vectors would have "
                               "non-integral heights");
    std::vector<std::vector<Int>> numerators;
    for (std::uint16_t w : code.codewords()) {
        std::vector<Int> num(code.length(), Int(0));
        for (std::size_t j = 0; j < code.length(); ++j)
            if (w & (1u << j)) num[j] = 1;
        numerators.push_back(std::move(num));
    }
    return SimplexGroup::from_elements(code.length(), Int(2), std::move(numerators));
}

BinaryCode group_to_code(const SimplexGroup& group) {
    if (group.length() > 16) throw RangeError("group length exceeds the code length cap");
    std::vector<std::uint16_t> gens;
    for (const auto& el : group.elements()) {
        if (!el.is_half_integral())
            throw IntegralityError("group element " + el.str() +
                                   " has a coordinate outside {0, 1/2}");
        std::uint16_t w = 0;
        for (std::size_t j = 0; j < el.num.size(); ++j)
            if (el.num[j] != 0) w |= static_cast<std::uint16_t>(1u << j);
        gens.push_back(w);
    }
    BinaryCode code = BinaryCode::from_generators(group.length(), std::move(gens));
    if (code.codewords().size() != group.order())
        throw ConsistencyError("doubled group is not closed under XOR");
    return code;
}

HStarPolynomial hstar_from_code(const BinaryCode& code) {
    if (!is_even(code)) throw IntegralityError("h* from a code requires an even code");
    auto wd = weight_distribution(code);
    std::size_t top = 0;
    for (std::size_t w = 0; w < wd.counts.size(); ++w)
        if (wd.counts[w]) top = w;
    std::vector<Int> coeffs(top / 2 + 1, Int(0));
    for (std::size_t w = 0; w < wd.counts.size(); w += 2)
        if (wd.counts[w]) coeffs[w / 2] = static_cast<unsigned long>(wd.counts[w]);
    return make_hstar(std::move(coeffs));
}

CanonicalCode canonical_code(const BinaryCode& code) {
    std::vector<std::vector<std::uint8_t>> rows;
    rows.reserve(code.codewords().size());
    for (std::uint16_t w : code.codewords()) {
        std::vector<std::uint8_t> row(code.length());
        for (std::size_t j = 0; j < code.length(); ++j) row[j] = (w >> j) & 1u;
        rows.push_back(std::move(row));
    }
    auto canon = detail::canonical_columns<std::uint8_t>(rows);
    CanonicalCode out;
    out.length = code.length();
    for (const auto& row : canon.rows) {
        std::uint16_t w = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) w |= static_cast<std::uint16_t>(1u << j);
        out.words.push_back(w);
    }
    std::sort(out.words.begin(), out.words.end());
    out.generators = rref(out.words, out.length);
    return out;
}

std::vector<BinaryCode> enumerate_escc(std::size_t length) {
    if (length % 2 != 0 || length < 2 || length > 10)
        throw RangeError("even self-complementary enumeration supports even lengths 2..10");
    const std::size_t m = length - 2;  // dim of E_n / <1>
    const std::uint16_t ones = static_cast<std::uint16_t>((1u << length) - 1);
    // basis of E_n: w_i = e_i + e_{n-1}; the quotient by <1> is spanned by
    // the classes of w_0, ..., w_{m-1}
    std::vector<std::uint16_t> w(m);
    for (std::size_t i = 0; i < m; ++i)
        w[i] = static_cast<std::uint16_t>((1u << i) | (1u << (length - 1)));

    std::map<std::pair<std::size_t, std::vector<unsigned long long>>,
             std::map<CanonicalCode, BinaryCode>>
        classes;

    auto consider = [&](const std::vector<std::uint16_t>& quotient_rows) {
        std::vector<std::uint16_t> gens{ones};
        for (std::uint16_t row : quotient_rows) {
            std::uint16_t lifted = 0;
            for (std::size_t i = 0; i < m; ++i)
                if (row & (1u << i)) lifted ^= w[i];
            gens.push_back(lifted);
        }
        BinaryCode code = BinaryCode::from_generators(length, std::move(gens));
        auto wd = weight_distribution(code);
        auto key = std::make_pair(code.dim(), wd.counts);
        auto canon = canonical_code(code);
        auto& bucket = classes[key];
        if (bucket.find(canon) == bucket.end()) {
            BinaryCode rep = BinaryCode::from_generators(length, canon.generators);
            bucket.emplace(std::move(canon), std::move(rep));
        }
    };

    // all reduced-row-echelon k x m matrices over F_2, one per subspace
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<std::size_t> pivots(k);
        auto choose = [&](auto&& self, std::size_t idx, std::size_t start) -> void {
            if (idx == k) {
                // free cells: row i may have arbitrary entries in non-pivot
                // columns right of its pivot
                std::vector<std::pair<std::size_t, std::size_t>> cells;  // (row, col)
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t c = pivots[i] + 1; c < m; ++c)
                        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                            cells.emplace_back(i, c);
                const std::size_t f = cells.size();
                for (unsigned long long fill = 0; fill < (1ull << f); ++fill) {
                    std::vector<std::uint16_t> rows(k, 0);
                    for (std::size_t i = 0; i < k; ++i)
                        rows[i] = static_cast<std::uint16_t>(1u << pivots[i]);
                    for (std::size_t b = 0; b < f; ++b)
                        if (fill & (1ull << b))
                            rows[cells[b].first] |=
                                static_cast<std::uint16_t>(1u << cells[b].second);
                    consider(rows);
                }
                return;
            }
            for (std::size_t c = start; c < m; ++c) {
                pivots[idx] = c;
                self(self, idx + 1, c + 1);
            }
        };
        choose(choose, 0, 0);
    }

    std::vector<BinaryCode> out;
    for (const auto& [key, bucket] : classes)
        for (const auto& [canon, code] : bucket) out.push_back(code);
    return out;
}

}  // namespace latcode
