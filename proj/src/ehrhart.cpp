#include "latcode/ehrhart.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace latcode {

bool PointCounter::Row::operator<(const Row& o) const {
    if (coeff != o.coeff) return coeff < o.coeff;
    return k_coeff < o.k_coeff;
}

namespace {

void normalize_row(std::vector<Int>& coeff, Int& k_coeff) {
    Int g = 0;
    for (const Int& c : coeff) g = gcd(g, c);
    g = gcd(g, k_coeff);
    if (g > 1) {
        for (Int& c : coeff) c /= g;
        k_coeff /= g;
    }
}

}  // namespace

PointCounter::PointCounter(const LatticeSimplex& simplex) : dim_(simplex.dim()) {
    const std::size_t n = dim_ + 1;
    auto adjd = adjugate(simplex.homogeneous_matrix());
    const int sign = sgn(adjd.det);

    // facet inequalities: barycentric numerators lambda_i * |det| >= 0,
    // read off the columns of the adjugate
    std::vector<Row> full;
    for (std::size_t i = 0; i < n; ++i) {
        Row row;
        row.coeff.resize(dim_);
        for (std::size_t j = 0; j < dim_; ++j) row.coeff[j] = sign * adjd.adj.at(j, i);
        row.k_coeff = sign * adjd.adj.at(dim_, i);
        normalize_row(row.coeff, row.k_coeff);
        full.push_back(std::move(row));
    }

    levels_.resize(dim_);
    levels_[dim_ - 1] = std::move(full);
    // eliminate the last variable of each level to get the next projection;
    // every stored row keeps a full-length, zero-padded coefficient vector
    for (std::size_t lvl = dim_ - 1; lvl > 0; --lvl) {
        const auto& sys = levels_[lvl];
        std::map<std::vector<Int>, Int> best;  // coeffs -> smallest k coefficient
        auto insert_row = [&](std::vector<Int> coeff, Int k_coeff) {
            bool any = std::any_of(coeff.begin(), coeff.end(),
                                   [](const Int& c) { return c != 0; });
            if (!any) {
                if (k_coeff <= 0)
                    throw ConsistencyError("facet elimination produced an infeasible row");
                return;  // vacuous for every dilate k >= 1
            }
            normalize_row(coeff, k_coeff);
            auto it = best.find(coeff);
            if (it == best.end())
                best.emplace(std::move(coeff), std::move(k_coeff));
            else if (k_coeff < it->second)
                it->second = k_coeff;
        };
        for (const Row& row : sys)
            if (row.coeff[lvl] == 0) insert_row(row.coeff, row.k_coeff);
        for (const Row& lo : sys) {
            if (lo.coeff[lvl] <= 0) continue;
            for (const Row& hi : sys) {
                if (hi.coeff[lvl] >= 0) continue;
                std::vector<Int> coeff(dim_, Int(0));
                for (std::size_t j = 0; j < lvl; ++j)
                    coeff[j] = lo.coeff[j] * (-hi.coeff[lvl]) + hi.coeff[j] * lo.coeff[lvl];
                Int k_coeff = lo.k_coeff * (-hi.coeff[lvl]) + hi.k_coeff * lo.coeff[lvl];
                insert_row(std::move(coeff), std::move(k_coeff));
            }
        }
        levels_[lvl - 1].clear();
        for (const auto& [coeff, k_coeff] : best)
            levels_[lvl - 1].push_back(Row{coeff, k_coeff});
    }
}

bool PointCounter::bounds_at_level(std::size_t level, const std::vector<Int>& prefix,
                                   const Int& dilate, bool interior, Int& lo, Int& hi) const {
    bool has_lo = false, has_hi = false;
    for (const Row& row : levels_[level]) {
        if (row.coeff.size() <= level || row.coeff[level] == 0) continue;
        Int value = row.k_coeff * dilate;
        for (std::size_t j = 0; j < level; ++j) value += row.coeff[j] * prefix[j];
        const Int& c = row.coeff[level];
        if (c > 0) {
            // c*y + value >= 0  (or > 0)
            Int bound = interior ? floor_div(-value, c) + 1 : ceil_div(-value, c);
            if (!has_lo || bound > lo) {
                lo = bound;
                has_lo = true;
            }
        } else {
            Int bound = interior ? ceil_div(value, -c) - 1 : floor_div(value, -c);
            if (!has_hi || bound < hi) {
                hi = bound;
                has_hi = true;
            }
        }
    }
    // a bounded polytope always yields both bounds at every level
    if (!has_lo || !has_hi) throw ConsistencyError("unbounded coordinate range");
    return lo <= hi;
}

template <typename Leaf>
void PointCounter::scan(const Int& dilate, bool interior, unsigned long long budget,
                        Leaf&& leaf) const {
    unsigned long long nodes = 0;
    std::vector<Int> prefix(dim_, Int(0));
    auto recurse = [&](auto&& self, std::size_t level) -> bool {
        Int lo, hi;
        if (!bounds_at_level(level, prefix, dilate, interior, lo, hi)) return true;
        if (level + 1 == dim_) {
            if (++nodes > budget) throw BudgetError("point enumeration budget exhausted");
            return leaf(prefix, lo, hi);
        }
        for (Int y = lo; y <= hi; ++y) {
            if (++nodes > budget) throw BudgetError("point enumeration budget exhausted");
            prefix[level] = y;
            if (!self(self, level + 1)) return false;
        }
        return true;
    };
    recurse(recurse, 0);
}

Int PointCounter::count(const Int& dilate, bool interior, unsigned long long budget) const {
    if (dilate < 1) throw RangeError("dilate must be >= 1");
    Int total = 0;
    scan(dilate, interior, budget, [&](const std::vector<Int>&, const Int& lo, const Int& hi) {
        total += hi - lo + 1;
        return true;
    });
    return total;
}

std::vector<std::vector<Int>> PointCounter::collect(const Int& dilate, bool interior,
                                                    std::size_t max_points,
                                                    unsigned long long budget) const {
    if (dilate < 1) throw RangeError("dilate must be >= 1");
    std::vector<std::vector<Int>> points;
    scan(dilate, interior, budget,
         [&](const std::vector<Int>& prefix, const Int& lo, const Int& hi) {
             for (Int y = lo; y <= hi; ++y) {
                 std::vector<Int> p = prefix;
                 p[dim_ - 1] = y;
                 points.push_back(std::move(p));
                 if (points.size() > max_points) return false;
             }
             return true;
         });
    return points;
}

Int count_points(const LatticeSimplex& simplex, const Int& dilate, bool interior,
                 unsigned long long budget) {
    return PointCounter(simplex).count(dilate, interior, budget);
}

namespace {

Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

EhrhartData ehrhart_polynomial(const LatticeSimplex& simplex, unsigned long long budget) {
    const std::size_t d = simplex.dim();
    PointCounter counter(simplex);
    EhrhartData data;
    data.dim = d;
    for (std::size_t k = 1; k <= d + 1; ++k) {
        data.counts.push_back(counter.count(Int(static_cast<unsigned long>(k)), false, budget));
        data.interior_counts.push_back(
            counter.count(Int(static_cast<unsigned long>(k)), true, budget));
    }

    auto count_at = [&](std::size_t k) -> Int { return k == 0 ? Int(1) : data.counts[k - 1]; };

    // h*_j = sum_i (-1)^i C(d+1, i) L(j - i); the j = d+1 row must vanish
    std::vector<Int> hstar;
    for (std::size_t j = 0; j <= d + 1; ++j) {
        Int h = 0;
        for (std::size_t i = 0; i <= j; ++i) {
            Int term = binomial(static_cast<unsigned long>(d + 1), static_cast<unsigned long>(i)) *
                       count_at(j - i);
            if (i % 2)
                h -= term;
            else
                h += term;
        }
        if (j <= d) {
            if (h < 0) throw ConsistencyError("negative h* coefficient from point counts");
            hstar.push_back(std::move(h));
        } else if (h != 0) {
            throw ConsistencyError("point counts are not consistent with a degree-d polynomial");
        }
    }
    data.hstar = make_hstar(std::move(hstar));
    if (data.hstar.value_at_one() != simplex.normalized_volume())
        throw ConsistencyError("h*(1) does not equal the normalized volume");

    // interpolate L(k) through k = 0..d, then check the value at d+1
    std::vector<std::vector<Rat>> vandermonde(d + 1, std::vector<Rat>(d + 1));
    std::vector<std::vector<Rat>> rhs(1, std::vector<Rat>(d + 1));
    for (std::size_t k = 0; k <= d; ++k) {
        Rat pw = 1;
        for (std::size_t i = 0; i <= d; ++i) {
            vandermonde[k][i] = pw;
            pw *= Rat(static_cast<unsigned long>(k));
        }
        rhs[0][k] = Rat(count_at(k));
    }
    data.polynomial = solve_columns(vandermonde, rhs)[0];
    Rat check = 0;
    Rat pw = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        check += data.polynomial[i] * pw;
        pw *= Rat(static_cast<unsigned long>(d + 1));
    }
    if (check != Rat(count_at(d + 1)))
        throw ConsistencyError("interpolated Ehrhart polynomial misses L(d+1)");
    return data;
}

Int codegree_oracle(const LatticeSimplex& simplex, unsigned long long budget) {
    const std::size_t d = simplex.dim();
    PointCounter counter(simplex);
    for (std::size_t k = 1; k <= d + 1; ++k)
        if (counter.count(Int(static_cast<unsigned long>(k)), true, budget) > 0)
            return Int(static_cast<unsigned long>(k));
    throw ConsistencyError("codegree exceeds d+1");
}

}  // namespace latcode
