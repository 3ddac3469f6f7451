#include <sstream>

#include "latcode/io.hpp"

namespace latcode {

namespace {

// 5-dimensional degree-3 classification table
const char* const kDegree3 = R"(
row T3.1
graph empty
hstar 1 0 0 1
vertex 0 0 0 0 0
vertex 1 0 0 0 0
vertex 0 1 0 0 0
vertex 0 0 1 0 0
vertex 0 0 0 1 0
vertex 1 1 1 1 2

row T3.2
graph K2
hstar 1 1 1 1
vertex 0 0 0 0 0
vertex 1 0 0 0 0
vertex 0 1 0 0 0
vertex 0 0 1 0 0
vertex 0 0 0 2 0
vertex 1 1 1 0 2

row T3.3
graph K3
hstar 1 3 3 1
vertex 0 0 0 0 0
vertex 1 0 0 0 0
vertex 0 1 0 0 0
vertex 0 0 2 0 0
vertex 0 0 0 2 0
vertex 1 1 0 0 2

row T3.4
graph 3K2
hstar 1 3 3 1
vertex 0 0 0 0 0
vertex 1 0 0 0 0
vertex 0 1 0 0 0
vertex 0 0 2 0 0
vertex 0 1 0 2 0
vertex 1 0 0 0 2

row T3.5
graph K4+K2
hstar 1 7 7 1
vertex 0 0 0 0 0
vertex 1 0 0 0 0
vertex 0 2 0 0 0
vertex 0 0 2 0 0
vertex 0 0 0 2 0
vertex 1 0 0 0 2

row T3.6
graph K6
hstar 1 15 15 1
vertex 0 0 0 0 0
vertex 2 0 0 0 0
vertex 0 2 0 0 0
vertex 0 0 2 0 0
vertex 0 0 0 2 0
vertex 0 0 0 0 2
)";

// 7-dimensional degree-4 classification table
const char* const kDegree4 = R"(
row T4.1
graph empty
hstar 1 0 0 0 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 0 0 0 0 1 0 0
vertex 0 0 0 0 0 1 0
vertex 1 1 1 1 1 1 2

row T4.2
graph empty
hstar 1 0 2 0 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 1 1 2 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 0 0 0 0 1 0 0
vertex 0 0 0 0 0 1 0
vertex 0 0 0 1 1 1 2

row T4.3
graph empty
hstar 1 0 6 0 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 1 0 0 1 2 0 0
vertex 0 1 0 1 0 2 0
vertex 0 0 1 1 0 0 2

row T4.4
graph empty
hstar 1 0 14 0 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 1 1 2 0 0 0
vertex 1 0 1 0 2 0 0
vertex 1 1 0 0 0 2 0
vertex 1 1 1 0 0 0 2

row T4.5
graph K2
hstar 1 1 0 1 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 0 0 0 0 1 0 0
vertex 1 0 0 0 0 2 0
vertex 0 1 1 1 1 0 2

row T4.6
graph K2
hstar 1 1 4 1 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 0 0 0 0 2 0 0
vertex 1 1 0 0 0 2 0
vertex 0 0 1 1 0 0 2

row T4.7
graph 2K2
hstar 1 2 2 2 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 1 0 0 0 2 0 0
vertex 0 1 0 0 0 2 0
vertex 0 0 1 1 0 0 2

row T4.8
graph 2K2
hstar 1 2 10 2 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 1 0 0 0 2 0 0
vertex 1 1 0 0 0 2 0
vertex 1 0 1 0 0 0 2

row T4.9
graph K3
hstar 1 3 0 3 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 1 0 0 0
vertex 0 0 0 0 2 0 0
vertex 0 0 0 0 0 2 0
vertex 1 1 1 1 0 0 2

row T4.10
graph 4K2
hstar 1 4 6 4 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 1 2 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 1 2 0 0 0
vertex 0 0 0 0 1 0 0
vertex 0 0 0 0 1 2 0
vertex 0 0 0 0 0 0 2

row T4.11
graph 4K2
hstar 1 4 22 4 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 1 0 2 0 0 0
vertex 1 0 0 0 2 0 0
vertex 1 1 0 0 0 2 0
vertex 1 1 0 0 0 0 2

row T4.12
graph K3+K2
hstar 1 4 6 4 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 1 0 0 0 0 2 0
vertex 0 1 1 0 0 0 2

row T4.13
graph 2K3
hstar 1 6 18 6 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 1 0 0 0 2 0 0
vertex 1 0 0 0 0 2 0
vertex 1 1 0 0 0 0 2

row T4.14
graph K4
hstar 1 6 2 6 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 1 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 0 0 0 0 0 2 0
vertex 1 1 1 0 0 0 2

row T4.15
graph K4+2K2
hstar 1 8 14 8 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 1 0 0 0 0 2 0
vertex 0 1 0 0 0 0 2

row T4.16
graph 2K4
hstar 1 12 38 12 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 2 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 1 0 0 0 2 0 0
vertex 1 0 0 0 0 2 0
vertex 1 0 0 0 0 0 2

row T4.17
graph K5
hstar 1 10 10 10 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 1 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 0 0 0 0 0 2 0
vertex 1 1 0 0 0 0 2

row T4.18
graph K6+K2
hstar 1 16 30 16 1
vertex 0 0 0 0 0 0 0
vertex 1 0 0 0 0 0 0
vertex 0 2 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 0 0 0 0 0 2 0
vertex 1 0 0 0 0 0 2

row T4.19
graph K8
hstar 1 28 70 28 1
vertex 0 0 0 0 0 0 0
vertex 2 0 0 0 0 0 0
vertex 0 2 0 0 0 0 0
vertex 0 0 2 0 0 0 0
vertex 0 0 0 2 0 0 0
vertex 0 0 0 0 2 0 0
vertex 0 0 0 0 0 2 0
vertex 0 0 0 0 0 0 2
)";

std::vector<TableRow> parse_embedded(const char* text) {
    std::istringstream is(text);
    return parse_table_rows(is);
}

}  // namespace

const std::vector<TableRow>& golden_table_degree3() {
    static const std::vector<TableRow> rows = parse_embedded(kDegree3);
    return rows;
}

const std::vector<TableRow>& golden_table_degree4() {
    static const std::vector<TableRow> rows = parse_embedded(kDegree4);
    return rows;
}

}  // namespace latcode
