#include "latcode/simplex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "latcode/ehrhart.hpp"

namespace latcode {

bool GroupElement::is_zero() const {
    return std::all_of(num.begin(), num.end(), [](const Int& v) { return v == 0; });
}

Int GroupElement::height() const {
    Int sum = 0;
    for (const Int& v : num) sum += v;
    if (sum % q != 0) throw IntegralityError("group element has non-integral coordinate sum");
    return sum / q;
}

GroupElement GroupElement::add(const GroupElement& other) const {
    if (q != other.q || num.size() != other.num.size())
        throw DimensionError("adding group elements over different groups");
    GroupElement out{q, std::vector<Int>(num.size())};
    for (std::size_t i = 0; i < num.size(); ++i) out.num[i] = mod_floor(num[i] + other.num[i], q);
    return out;
}

GroupElement GroupElement::negate() const {
    GroupElement out{q, std::vector<Int>(num.size())};
    for (std::size_t i = 0; i < num.size(); ++i) out.num[i] = mod_floor(-num[i], q);
    return out;
}

std::size_t GroupElement::support_size() const {
    return static_cast<std::size_t>(
        std::count_if(num.begin(), num.end(), [](const Int& v) { return v != 0; }));
}

bool GroupElement::is_half_integral() const {
    return std::all_of(num.begin(), num.end(),
                       [this](const Int& v) { return v == 0 || 2 * v == q; });
}

bool GroupElement::operator<(const GroupElement& other) const {
    if (q != other.q) return q < other.q;
    return num < other.num;
}

std::string GroupElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (i) os << ", ";
        if (num[i] == 0) {
            os << "0";
        } else {
            Int g = gcd(num[i], q);
            os << num[i] / g << "/" << q / g;
        }
    }
    os << ")";
    return os.str();
}

SimplexGroup SimplexGroup::from_elements(std::size_t length, const Int& q,
                                         std::vector<std::vector<Int>> numerators) {
    if (length == 0) throw DimensionError("group elements must have positive length");
    if (q < 1) throw DimensionError("denominator must be >= 1");
    // common factor of q and every numerator; dividing it out leaves the
    // group exponent as denominator
    Int g = q;
    for (const auto& row : numerators) {
        if (row.size() != length) throw DimensionError("group element length mismatch");
        for (const Int& v : row) {
            if (v < 0 || v >= q) throw DimensionError("numerator outside [0, q)");
            g = gcd(g, v);
            if (g == 1) break;
        }
    }
    SimplexGroup out;
    out.length_ = length;
    out.q_ = q / g;
    out.elements_.reserve(numerators.size());
    for (auto& row : numerators) {
        GroupElement el{out.q_, std::move(row)};
        if (g != 1)
            for (Int& v : el.num) v /= g;
        out.elements_.push_back(std::move(el));
    }
    std::sort(out.elements_.begin(), out.elements_.end());
    out.elements_.erase(std::unique(out.elements_.begin(), out.elements_.end()),
                        out.elements_.end());
    return out;
}

bool SimplexGroup::contains(const GroupElement& x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

void SimplexGroup::verify_closed() const {
    GroupElement zero{q_, std::vector<Int>(length_, Int(0))};
    if (!contains(zero)) throw ClosureError("group does not contain the zero element");
    for (const auto& el : elements_) el.height();  // throws on non-integral sum
    for (const auto& a : elements_)
        for (const auto& b : elements_)
            if (!contains(a.add(b)))
                throw ClosureError("set is not closed under addition mod 1");
}

IntMatrix LatticeSimplex::homogeneous_matrix() const {
    const std::size_t d = dim();
    IntMatrix m(d + 1, d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        for (std::size_t j = 0; j < d; ++j) m.at(i, j) = vertices[i][j];
        m.at(i, d) = 1;
    }
    return m;
}

Int LatticeSimplex::normalized_volume() const {
    Int det = determinant(homogeneous_matrix());
    if (det == 0) throw DegeneracyError("degenerate simplex: vertex matrix is singular");
    return abs(det);
}

LatticeSimplex make_simplex(const std::vector<std::vector<Int>>& vertices) {
    if (vertices.size() < 2) throw DimensionError("a simplex needs at least two vertices (d >= 1)");
    const std::size_t d = vertices[0].size();
    if (d == 0) throw DimensionError("minimum dimension is 1");
    if (vertices.size() != d + 1)
        throw DimensionError("a simplex in dimension " + std::to_string(d) + " needs " +
                             std::to_string(d + 1) + " vertices, got " +
                             std::to_string(vertices.size()));
    for (const auto& v : vertices)
        if (v.size() != d) throw DimensionError("vertex coordinate count mismatch");
    return LatticeSimplex{vertices};
}

Int HStarPolynomial::value_at_one() const {
    Int sum = 0;
    for (const Int& c : coeffs) sum += c;
    return sum;
}

std::string HStarPolynomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << "+";
        if (i == 0) {
            os << coeffs[i];
        } else {
            if (coeffs[i] != 1) os << coeffs[i];
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

HStarPolynomial make_hstar(std::vector<Int> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty() || coeffs[0] != 1)
        throw ConsistencyError("h* polynomial must have constant term 1");
    for (const Int& c : coeffs)
        if (c < 0) throw ConsistencyError("h* coefficients must be nonnegative");
    return HStarPolynomial{std::move(coeffs)};
}

SimplexGroup group_of_simplex(const LatticeSimplex& simplex) {
    const std::size_t n = simplex.dim() + 1;
    IntMatrix a = simplex.homogeneous_matrix();
    Int det = determinant(a);
    if (det == 0) throw DegeneracyError("degenerate simplex: vertex matrix is singular");

    auto snf = smith_normal_form(a);
    auto divisors = snf.elementary_divisors();
    Int q = divisors.back();  // group exponent

    // generators: rows of q * A^{-1} reduced mod q
    auto adjd = adjugate(a);
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> g(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            Int t = q * adjd.adj.at(i, j);
            if (t % det != 0) throw ConsistencyError("q * A^{-1} is not integral");
            g[j] = mod_floor(t / det, q);
            if (g[j] != 0) nonzero = true;
        }
        if (nonzero) gens.push_back(std::move(g));
    }

    std::set<std::vector<Int>> seen;
    std::queue<std::vector<Int>> work;
    seen.insert(std::vector<Int>(n, Int(0)));
    work.push(std::vector<Int>(n, Int(0)));
    while (!work.empty()) {
        std::vector<Int> x = std::move(work.front());
        work.pop();
        for (const auto& g : gens) {
            std::vector<Int> y(n);
            for (std::size_t j = 0; j < n; ++j) y[j] = mod_floor(x[j] + g[j], q);
            if (seen.insert(y).second) work.push(std::move(y));
        }
    }
    if (Int(seen.size()) != abs(det))
        throw ConsistencyError("group order does not match |det|");
    return SimplexGroup::from_elements(
        n, q, std::vector<std::vector<Int>>(seen.begin(), seen.end()));
}

HStarPolynomial hstar_from_group(const SimplexGroup& group) {
    std::map<unsigned long, Int> hist;
    unsigned long max_h = 0;
    for (const auto& el : group.elements()) {
        unsigned long h = el.height().get_ui();
        ++hist[h];
        max_h = std::max(max_h, h);
    }
    std::vector<Int> coeffs(max_h + 1, Int(0));
    for (const auto& [h, c] : hist) coeffs[h] = c;
    return make_hstar(std::move(coeffs));
}

std::optional<std::size_t> is_pyramid(const SimplexGroup& group) {
    for (std::size_t j = 0; j < group.length(); ++j) {
        bool all_zero = true;
        for (const auto& el : group.elements())
            if (el.num[j] != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return j;
    }
    return std::nullopt;
}

LatticeSimplex pyramid(const LatticeSimplex& simplex) {
    const std::size_t d = simplex.dim();
    std::vector<std::vector<Int>> vertices;
    vertices.reserve(d + 2);
    for (const auto& v : simplex.vertices) {
        std::vector<Int> w = v;
        w.push_back(0);
        vertices.push_back(std::move(w));
    }
    std::vector<Int> apex(d + 1, Int(0));
    apex[d] = 1;
    vertices.push_back(std::move(apex));
    return make_simplex(vertices);
}

bool is_gorenstein(const HStarPolynomial& h) {
    const std::size_t s = h.degree();
    for (std::size_t i = 0; i <= s; ++i)
        if (h.coeffs[i] != h.coeffs[s - i]) return false;
    return true;
}

DegreeCodegree degree_and_codegree(const HStarPolynomial& h, std::size_t dim) {
    const std::size_t s = h.degree();
    if (s > dim) throw DimensionError("h* degree exceeds polytope dimension");
    return DegreeCodegree{s, dim + 1 - s};
}

bool InteriorPointData::all_lambda_in_open_unit_interval() const {
    return std::all_of(lambda.begin(), lambda.end(),
                       [](const Rat& l) { return l > 0 && l < 1; });
}

InteriorPointData interior_point_data(const LatticeSimplex& simplex, const Int& r) {
    if (r < 1) throw PreconditionError("codegree must be positive");
    PointCounter counter(simplex);
    auto pts = counter.collect(r, /*interior=*/true, /*max_points=*/1);
    if (pts.size() != 1)
        throw PreconditionError("not Gorenstein at index " + r.get_str() + ": " +
                                (pts.empty() ? "no" : "more than one") +
                                " interior lattice point in r*Delta");
    const std::vector<Int>& p = pts[0];
    const std::size_t n = simplex.dim() + 1;
    auto adjd = adjugate(simplex.homogeneous_matrix());
    InteriorPointData out;
    out.codegree = r;
    out.point = p;
    out.lambda.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int numer = r * adjd.adj.at(n - 1, i);
        for (std::size_t j = 0; j + 1 < n; ++j) numer += p[j] * adjd.adj.at(j, i);
        Rat lambda(numer, adjd.det);
        lambda.canonicalize();
        out.lambda[i] = lambda;
        if (lambda <= 0) throw ConsistencyError("interior point has a non-positive barycentric coefficient");
        if (lambda == 1 && !out.unit_coefficient) out.unit_coefficient = i;
    }
    Rat total = 0;
    for (const Rat& l : out.lambda) total += l;
    if (total != Rat(r)) throw ConsistencyError("barycentric coefficients do not sum to r");
    return out;
}

bool top_element_support_check(const SimplexGroup& group, std::size_t s) {
    if (s == 0) return true;
    const GroupElement* top = nullptr;
    for (const auto& el : group.elements()) {
        if (el.height() == Int(static_cast<unsigned long>(s))) {
            if (top) throw PreconditionError("group has several elements of height s");
            top = &el;
        }
    }
    if (!top) throw PreconditionError("group has no element of height s");
    return std::all_of(top->num.begin(), top->num.end(), [](const Int& v) { return v > 0; });
}

}  // namespace latcode
