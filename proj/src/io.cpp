#include "latcode/io.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "latcode/correspond.hpp"

namespace latcode {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<Int> parse_int_list(const std::string& text, int line) {
    std::istringstream is(text);
    std::vector<Int> out;
    std::string token;
    while (is >> token) {
        try {
            out.emplace_back(token);
        } catch (const std::invalid_argument&) {
            throw ParseError(line, "not an integer: '" + token + "'");
        }
    }
    return out;
}

}  // namespace

std::vector<SimplexDocument> parse_simplex_documents(std::istream& in) {
    std::vector<SimplexDocument> docs;
    SimplexDocument current;
    std::string line;
    int lineno = 0;
    auto flush = [&]() {
        if (current.vertices.empty()) {
            current = SimplexDocument{};
            return;
        }
        const std::size_t d = current.vertices[0].size();
        if (current.vertices.size() != d + 1)
            throw ParseError(current.first_line,
                             "simplex block has " + std::to_string(current.vertices.size()) +
                                 " vertices but dimension " + std::to_string(d) + " needs " +
                                 std::to_string(d + 1));
        docs.push_back(std::move(current));
        current = SimplexDocument{};
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') {
            if (current.vertices.empty() && current.label.empty())
                current.label = trim(t.substr(1));
            continue;
        }
        auto coords = parse_int_list(t, lineno);
        if (coords.empty()) continue;
        if (current.vertices.empty()) {
            current.first_line = lineno;
            if (coords.empty()) throw ParseError(lineno, "empty vertex");
        } else if (coords.size() != current.vertices[0].size()) {
            throw ParseError(lineno, "vertex has " + std::to_string(coords.size()) +
                                         " coordinates, expected " +
                                         std::to_string(current.vertices[0].size()));
        }
        current.vertices.push_back(std::move(coords));
    }
    flush();
    return docs;
}

std::vector<TableRow> parse_table_rows(std::istream& in) {
    std::vector<TableRow> rows;
    TableRow current;
    bool open = false;
    std::string line;
    int lineno = 0;
    auto flush = [&]() {
        if (!open) return;
        if (current.vertices.empty()) throw ParseError(lineno, "table row without vertices");
        rows.push_back(std::move(current));
        current = TableRow{};
        open = false;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream is(t);
        std::string key;
        is >> key;
        std::string rest;
        std::getline(is, rest);
        rest = trim(rest);
        if (key == "row") {
            flush();
            open = true;
            current.id = rest;
        } else if (key == "graph") {
            current.graph_label = rest;
        } else if (key == "hstar") {
            current.hstar = parse_int_list(rest, lineno);
        } else if (key == "vertex") {
            current.vertices.push_back(parse_int_list(rest, lineno));
        } else {
            throw ParseError(lineno, "unknown table key '" + key + "'");
        }
    }
    flush();
    return rows;
}

bool VerifyReport::all_ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowCheck& r) { return r.ok(); });
}

VerifyReport verify_tables(const std::vector<TableRow>& rows, const VerifyOptions& options) {
    VerifyReport report;
    std::map<std::size_t, std::vector<ExtremalClass>> classification_by_s;
    for (const TableRow& row : rows) {
        RowCheck check;
        check.id = row.id;
        try {
            LatticeSimplex simplex = make_simplex(row.vertices);
            SimplexGroup group = group_of_simplex(simplex);
            HStarPolynomial expected = make_hstar(row.hstar);
            const std::size_t s = expected.degree();

            HStarPolynomial from_group = hstar_from_group(group);
            if (!(from_group == expected))
                check.failures.push_back("group h* is " + from_group.str() + ", table says " +
                                         expected.str());

            try {
                BinaryCode code = group_to_code(group);
                HStarPolynomial from_code = hstar_from_code(code);
                if (!(from_code == expected))
                    check.failures.push_back("code h* is " + from_code.str() + ", table says " +
                                             expected.str());
            } catch (const Error& e) {
                check.failures.push_back(std::string("code route failed: ") + e.what());
            }

            try {
                std::vector<GroupElement> h1;
                for (const auto& el : group.elements())
                    if (el.height() == 1) h1.push_back(el);
                std::string label = graph_of_h1(h1, group.length()).label();
                if (label != row.graph_label)
                    check.failures.push_back("graph is " + label + ", table says " +
                                             row.graph_label);
            } catch (const Error& e) {
                check.failures.push_back(std::string("graph route failed: ") + e.what());
            }

            auto it = classification_by_s.find(s);
            if (it == classification_by_s.end())
                it = classification_by_s
                         .emplace(s, classify_extremal(s, ClassifyRoute::Code))
                         .first;
            auto canon = canonical_group(group);
            std::size_t matches = 0;
            for (const auto& cls : it->second)
                if (cls.canonical == canon) ++matches;
            if (matches != 1)
                check.failures.push_back("row matches " + std::to_string(matches) +
                                         " classification classes, expected exactly 1");

            if (options.with_oracle) {
                EhrhartData oracle = ehrhart_polynomial(simplex, options.budget);
                if (!(oracle.hstar == expected))
                    check.failures.push_back("oracle h* is " + oracle.hstar.str() +
                                             ", table says " + expected.str());
            }
        } catch (const Error& e) {
            check.failures.push_back(e.what());
        }
        report.rows.push_back(std::move(check));
    }
    return report;
}

namespace {

std::string join_ints(const std::vector<Int>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << " ";
        os << values[i];
    }
    return os.str();
}

}  // namespace

void print_group_report(std::ostream& out, const SimplexDocument& doc, std::size_t index,
                        OutputFormat format) {
    LatticeSimplex simplex = make_simplex(doc.vertices);
    SimplexGroup group = group_of_simplex(simplex);
    HStarPolynomial hstar = hstar_from_group(group);
    auto dc = degree_and_codegree(hstar, simplex.dim());
    auto pyramid_coord = is_pyramid(group);
    const bool gorenstein = is_gorenstein(hstar);

    if (format == OutputFormat::Records) {
        out << "simplex " << index << "\n";
        if (!doc.label.empty()) out << "label " << doc.label << "\n";
        out << "dim " << simplex.dim() << "\n";
        out << "volume " << simplex.normalized_volume() << "\n";
        out << "group-order " << group.order() << "\n";
        out << "denominator " << group.denominator() << "\n";
        for (const auto& el : group.elements())
            out << "element " << join_ints(el.num) << " ht " << el.height() << "\n";
        out << "hstar " << join_ints(hstar.coeffs) << "\n";
        out << "degree " << dc.degree << "\n";
        out << "codegree " << dc.codegree << "\n";
        out << "gorenstein " << (gorenstein ? "yes" : "no") << "\n";
        if (pyramid_coord)
            out << "pyramid yes coordinate " << *pyramid_coord << "\n";
        else
            out << "pyramid no\n";
        out << "\n";
        return;
    }

    out << "simplex " << index;
    if (!doc.label.empty()) out << " (" << doc.label << ")";
    out << ": dim " << simplex.dim() << ", normalized volume " << simplex.normalized_volume()
        << "\n";
    out << "  group of order " << group.order() << ", denominator " << group.denominator()
        << "\n";
    for (const auto& el : group.elements())
        out << "    " << el.str() << "  ht " << el.height() << "\n";
    out << "  h* = " << hstar.str() << "\n";
    out << "  degree " << dc.degree << ", codegree " << dc.codegree << "\n";
    out << "  gorenstein: " << (gorenstein ? "yes" : "no") << "\n";
    if (pyramid_coord)
        out << "  lattice pyramid: yes (coordinate " << *pyramid_coord << " vanishes)\n";
    else
        out << "  lattice pyramid: no\n";
    out << "\n";
}

void print_classification(std::ostream& out, const std::vector<ExtremalClass>& classes,
                          OutputFormat format) {
    if (format == OutputFormat::Records) {
        for (const auto& cls : classes) {
            out << "class " << cls.id << "\n";
            out << "graph " << cls.graph_label << "\n";
            out << "hstar " << join_ints(cls.hstar.coeffs) << "\n";
            out << "order " << cls.group.order() << "\n";
            for (const auto& g : cls.code.generator_strings()) out << "generator " << g << "\n";
            for (const auto& v : cls.simplex.vertices) out << "vertex " << join_ints(v) << "\n";
            out << "\n";
        }
        return;
    }
    out << std::left << std::setw(8) << "class" << std::setw(10) << "graph" << std::setw(28)
        << "h*" << "code generators\n";
    for (const auto& cls : classes) {
        std::ostringstream gens;
        auto strings = cls.code.generator_strings();
        for (std::size_t i = 0; i < strings.size(); ++i) {
            if (i) gens << " ";
            gens << strings[i];
        }
        out << std::left << std::setw(8) << cls.id << std::setw(10) << cls.graph_label
            << std::setw(28) << cls.hstar.str() << gens.str() << "\n";
    }
}

void print_verify_report(std::ostream& out, const VerifyReport& report) {
    std::size_t passed = 0;
    for (const auto& row : report.rows) {
        if (row.ok()) {
            out << "row " << row.id << " ok\n";
            ++passed;
        } else {
            out << "row " << row.id << " FAILED\n";
            for (const auto& f : row.failures) out << "  " << f << "\n";
        }
    }
    out << passed << "/" << report.rows.size() << " rows verified\n";
}

}  // namespace latcode
