#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "latcode/ehrhart.hpp"
#include "latcode/extremal.hpp"

namespace latcode {

// One parsed simplex from the document format: one vertex per line as
// whitespace-separated integers, blank lines between simplices, '#' comment
// lines (the first comment of a block becomes its label).
struct SimplexDocument {
    std::string label;
    std::vector<std::vector<Int>> vertices;
    int first_line = 0;
};

std::vector<SimplexDocument> parse_simplex_documents(std::istream& in);

// A classification-table row: "row <id>", "graph <label>",
// "hstar <c0> <c1> ...", then "vertex <coords>" lines.
struct TableRow {
    std::string id;
    std::string graph_label;
    std::vector<Int> hstar;
    std::vector<std::vector<Int>> vertices;
};

std::vector<TableRow> parse_table_rows(std::istream& in);

/// The degree-3 and degree-4 classification tables shipped with the library.
const std::vector<TableRow>& golden_table_degree3();
const std::vector<TableRow>& golden_table_degree4();

struct VerifyOptions {
    bool with_oracle = true;
    unsigned long long budget = kDefaultEnumerationBudget;
};

struct RowCheck {
    std::string id;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

struct VerifyReport {
    std::vector<RowCheck> rows;
    bool all_ok() const;
};

// For every row: the group-derived, code-derived and (optionally)
// oracle-derived h* must equal the table's, the support-graph label must
// match, and the row's group must be equivalent to exactly one class of the
// classification at its degree.
VerifyReport verify_tables(const std::vector<TableRow>& rows, const VerifyOptions& options);

enum class OutputFormat { Records, Table };

void print_group_report(std::ostream& out, const SimplexDocument& doc, std::size_t index,
                        OutputFormat format);
void print_classification(std::ostream& out, const std::vector<ExtremalClass>& classes,
                          OutputFormat format);
void print_verify_report(std::ostream& out, const VerifyReport& report);

}  // namespace latcode
