// latcode: exact arithmetic for lattice simplex groups, their h*-polynomials,
// and the classification of extremal Gorenstein simplices via binary codes.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latcode/io.hpp"

namespace {

latcode::OutputFormat parse_format(const std::string& name) {
    if (name == "records") return latcode::OutputFormat::Records;
    if (name == "table") return latcode::OutputFormat::Table;
    throw CLI::ValidationError("--format must be 'records' or 'table'");
}

std::vector<latcode::SimplexDocument> read_documents(const std::string& path) {
    if (path.empty() || path == "-") return latcode::parse_simplex_documents(std::cin);
    std::ifstream in(path);
    if (!in) throw latcode::Error("cannot open input file: " + path);
    return latcode::parse_simplex_documents(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lattice simplex groups, h*-polynomials and code classifications"};
    app.require_subcommand(1);

    std::string format_name = "table";
    unsigned long long budget = latcode::kDefaultEnumerationBudget;
    app.add_option("--format", format_name, "output format: table or records")
        ->capture_default_str();
    app.add_option("--budget", budget, "point-enumeration node budget")->capture_default_str();

    auto* cmd_group = app.add_subcommand(
        "group", "group, h* and Gorenstein/pyramid verdicts of input simplices");
    std::string group_input = "-";
    cmd_group->add_option("input", group_input,
                          "simplex document ('-' for stdin): one vertex per line, "
                          "blank lines between simplices");

    auto* cmd_classify = app.add_subcommand(
        "classify", "classify extremal Gorenstein simplices of degree s");
    std::size_t s = 3;
    std::string route_name = "both";
    cmd_classify->add_option("--s", s, "degree (2s is the code length)")->required();
    cmd_classify->add_option("--route", route_name,
                             "code, section4, or both (routes must agree)")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand(
        "verify-tables", "check every classification-table row by group, code and oracle");
    bool no_oracle = false;
    std::string tables_path;
    cmd_verify->add_flag("--no-oracle", no_oracle, "skip the Ehrhart point-count verification");
    cmd_verify->add_option("--tables", tables_path,
                           "verify rows from a table file instead of the built-in tables");

    CLI11_PARSE(app, argc, argv);

    try {
        const latcode::OutputFormat format = parse_format(format_name);

        if (cmd_group->parsed()) {
            auto docs = read_documents(group_input);
            if (docs.empty()) {
                std::cerr << "no simplices in input\n";
                return 2;
            }
            for (std::size_t i = 0; i < docs.size(); ++i)
                latcode::print_group_report(std::cout, docs[i], i + 1, format);
            return 0;
        }

        if (cmd_classify->parsed()) {
            latcode::ClassifyRoute route;
            if (route_name == "code")
                route = latcode::ClassifyRoute::Code;
            else if (route_name == "section4")
                route = latcode::ClassifyRoute::Section4;
            else if (route_name == "both")
                route = latcode::ClassifyRoute::Both;
            else {
                std::cerr << "--route must be code, section4 or both\n";
                return 2;
            }
            auto classes = latcode::classify_extremal(s, route);
            latcode::print_classification(std::cout, classes, format);
            if (route == latcode::ClassifyRoute::Both)
                std::cout << "routes agree: " << classes.size() << " classes\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            std::vector<latcode::TableRow> rows;
            if (tables_path.empty()) {
                rows = latcode::golden_table_degree3();
                const auto& deg4 = latcode::golden_table_degree4();
                rows.insert(rows.end(), deg4.begin(), deg4.end());
            } else {
                std::ifstream in(tables_path);
                if (!in) throw latcode::Error("cannot open table file: " + tables_path);
                rows = latcode::parse_table_rows(in);
            }
            latcode::VerifyOptions options;
            options.with_oracle = !no_oracle;
            options.budget = budget;
            auto report = latcode::verify_tables(rows, options);
            latcode::print_verify_report(std::cout, report);
            return report.all_ok() ? 0 : 1;
        }
    } catch (const latcode::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const latcode::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
