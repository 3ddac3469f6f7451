#include <doctest.h>

#include <sstream>

#include "latcode/io.hpp"

using namespace latcode;

TEST_CASE("simplex document parsing") {
    std::istringstream in(R"(# segment
0
2

# triangle
0 0
1 0
0 1
)");
    auto docs = parse_simplex_documents(in);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].label == "segment");
    CHECK(docs[0].vertices == std::vector<std::vector<Int>>{{Int(0)}, {Int(2)}});
    CHECK(docs[1].label == "triangle");
    CHECK(docs[1].vertices.size() == 3);
}

TEST_CASE("simplex document diagnostics carry line numbers") {
    std::istringstream bad_count("0 0\n1 0\n");
    CHECK_THROWS_AS(parse_simplex_documents(bad_count), ParseError);
    std::istringstream bad_token("0 x\n");
    try {
        parse_simplex_documents(bad_token);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
    }
    std::istringstream ragged("0 0\n1\n0 1\n");
    CHECK_THROWS_AS(parse_simplex_documents(ragged), ParseError);
}

TEST_CASE("golden tables parse and have the advertised shape") {
    const auto& deg3 = golden_table_degree3();
    REQUIRE(deg3.size() == 6);
    for (const auto& row : deg3) {
        CHECK(row.vertices.size() == 6);
        CHECK(row.hstar.size() == 4);
    }
    const auto& deg4 = golden_table_degree4();
    REQUIRE(deg4.size() == 19);
    for (const auto& row : deg4) {
        CHECK(row.vertices.size() == 8);
        CHECK(row.hstar.size() == 5);
    }
}

TEST_CASE("verify-tables passes on the golden tables without the oracle") {
    VerifyOptions options;
    options.with_oracle = false;
    auto report = verify_tables(golden_table_degree3(), options);
    CHECK(report.all_ok());
    CHECK(report.rows.size() == 6);
}

TEST_CASE("verify-tables names a corrupted row") {
    auto rows = golden_table_degree3();
    rows[2].vertices[3][1] = 7;  // corrupt one vertex of T3.3
    VerifyOptions options;
    options.with_oracle = false;
    auto report = verify_tables(rows, options);
    CHECK_FALSE(report.all_ok());
    std::size_t failed = 0;
    for (const auto& row : report.rows)
        if (!row.ok()) {
            ++failed;
            CHECK(row.id == "T3.3");
        }
    CHECK(failed == 1);
}

TEST_CASE("group report is deterministic byte for byte") {
    SimplexDocument doc;
    doc.vertices = {{Int(0)}, {Int(2)}};
    std::ostringstream a, b;
    print_group_report(a, doc, 1, OutputFormat::Records);
    print_group_report(b, doc, 1, OutputFormat::Records);
    CHECK(a.str() == b.str());
    CHECK(a.str() == R"(simplex 1
dim 1
volume 2
group-order 2
denominator 2
element 0 0 ht 0
element 1 1 ht 1
hstar 1 1
degree 1
codegree 1
gorenstein yes
pyramid no

)");
}

TEST_CASE("classification printing emits one block per class") {
    auto classes = classify_extremal(2, ClassifyRoute::Both);
    std::ostringstream out;
    print_classification(out, classes, OutputFormat::Records);
    std::string text = out.str();
    std::size_t blocks = 0, pos = 0;
    while ((pos = text.find("class s2-", pos)) != std::string::npos) {
        ++blocks;
        pos += 1;
    }
    CHECK(blocks == 3);
}
