// Python bindings for the main operations: groups of simplices, h*
// polynomials, code dictionaries, classification and the point-count oracle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latcode/codes.hpp"
#include "latcode/correspond.hpp"
#include "latcode/ehrhart.hpp"
#include "latcode/extremal.hpp"
#include "latcode/io.hpp"

namespace py = pybind11;
using namespace latcode;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.get_str())); }

py::list int_list(const std::vector<Int>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

Int from_py(const py::int_& v) {
    std::string digits(py::str(static_cast<const py::object&>(v)));
    return Int(digits);
}

std::vector<std::vector<Int>> vertices_from_py(const std::vector<std::vector<py::int_>>& rows) {
    std::vector<std::vector<Int>> out;
    for (const auto& row : rows) {
        std::vector<Int> conv;
        for (const auto& v : row) conv.push_back(from_py(v));
        out.push_back(std::move(conv));
    }
    return out;
}

py::dict group_info(const LatticeSimplex& simplex) {
    SimplexGroup group = group_of_simplex(simplex);
    HStarPolynomial hstar = hstar_from_group(group);
    auto dc = degree_and_codegree(hstar, simplex.dim());
    py::dict out;
    out["dim"] = simplex.dim();
    out["volume"] = to_py(simplex.normalized_volume());
    out["order"] = group.order();
    out["denominator"] = to_py(group.denominator());
    py::list elements, heights;
    for (const auto& el : group.elements()) {
        elements.append(int_list(el.num));
        heights.append(to_py(el.height()));
    }
    out["elements"] = elements;
    out["heights"] = heights;
    out["hstar"] = int_list(hstar.coeffs);
    out["degree"] = dc.degree;
    out["codegree"] = dc.codegree;
    out["gorenstein"] = is_gorenstein(hstar);
    auto pyr = is_pyramid(group);
    out["pyramid_coordinate"] = pyr ? py::object(py::int_(*pyr)) : py::object(py::none());
    return out;
}

ClassifyRoute route_from_name(const std::string& name) {
    if (name == "code") return ClassifyRoute::Code;
    if (name == "section4") return ClassifyRoute::Section4;
    if (name == "both") return ClassifyRoute::Both;
    throw py::value_error("route must be 'code', 'section4' or 'both'");
}

}  // namespace

PYBIND11_MODULE(_latcode, m) {
    m.doc() = "exact lattice-simplex groups, h* polynomials and code classifications";

    py::register_exception<Error>(m, "LatcodeError");

    m.def("group_of_simplex",
          [](const std::vector<std::vector<py::int_>>& vertices) {
              return group_info(make_simplex(vertices_from_py(vertices)));
          },
          py::arg("vertices"),
          "Group, h*, degree/codegree and Gorenstein/pyramid verdicts of a lattice simplex.");

    m.def("hstar",
          [](const std::vector<std::vector<py::int_>>& vertices) {
              return int_list(
                  hstar_from_group(group_of_simplex(make_simplex(vertices_from_py(vertices))))
                      .coeffs);
          },
          py::arg("vertices"), "h*-polynomial coefficients of a lattice simplex.");

    m.def("count_points",
          [](const std::vector<std::vector<py::int_>>& vertices, unsigned long dilate,
             bool interior, unsigned long long budget) {
              return to_py(count_points(make_simplex(vertices_from_py(vertices)), Int(dilate),
                                        interior, budget));
          },
          py::arg("vertices"), py::arg("dilate"), py::arg("interior") = false,
          py::arg("budget") = kDefaultEnumerationBudget,
          "Exact number of lattice points of the dilate (or its interior).");

    m.def("ehrhart",
          [](const std::vector<std::vector<py::int_>>& vertices, unsigned long long budget) {
              auto data = ehrhart_polynomial(make_simplex(vertices_from_py(vertices)), budget);
              py::dict out;
              out["counts"] = int_list(data.counts);
              out["interior_counts"] = int_list(data.interior_counts);
              out["hstar"] = int_list(data.hstar.coeffs);
              return out;
          },
          py::arg("vertices"), py::arg("budget") = kDefaultEnumerationBudget,
          "Dilate point counts and the h* extracted from them by interpolation.");

    m.def("hstar_from_code",
          [](const std::vector<std::string>& generators, std::size_t length) {
              return int_list(
                  hstar_from_code(BinaryCode::from_strings(length, generators)).coeffs);
          },
          py::arg("generators"), py::arg("length"),
          "h* of the simplex attached to an even self-complementary code.");

    m.def("enumerate_escc",
          [](std::size_t length) {
              py::list out;
              for (const auto& code : enumerate_escc(length)) out.append(code.generator_strings());
              return out;
          },
          py::arg("length"),
          "Generator rows of every even self-complementary code class of this length.");

    m.def("classify",
          [](std::size_t s, const std::string& route) {
              py::list out;
              for (const auto& cls : classify_extremal(s, route_from_name(route))) {
                  py::dict entry;
                  entry["id"] = cls.id;
                  entry["graph"] = cls.graph_label;
                  entry["hstar"] = int_list(cls.hstar.coeffs);
                  entry["order"] = cls.group.order();
                  entry["generators"] = cls.code.generator_strings();
                  py::list vertices;
                  for (const auto& v : cls.simplex.vertices) vertices.append(int_list(v));
                  entry["vertices"] = vertices;
                  out.append(entry);
              }
              return out;
          },
          py::arg("s"), py::arg("route") = "both",
          "Classify extremal Gorenstein simplices of degree s.");

    m.def("verify_tables",
          [](bool with_oracle, unsigned long long budget) {
              std::vector<TableRow> rows = golden_table_degree3();
              const auto& deg4 = golden_table_degree4();
              rows.insert(rows.end(), deg4.begin(), deg4.end());
              VerifyOptions options;
              options.with_oracle = with_oracle;
              options.budget = budget;
              auto verdict = verify_tables(rows, options);
              py::dict out;
              out["ok"] = verdict.all_ok();
              py::list failures;
              for (const auto& row : verdict.rows)
                  for (const auto& f : row.failures) failures.append(row.id + ": " + f);
              out["failures"] = failures;
              out["rows"] = verdict.rows.size();
              return out;
          },
          py::arg("with_oracle") = true, py::arg("budget") = kDefaultEnumerationBudget,
          "Re-check every built-in table row; returns {ok, rows, failures}.");
}
