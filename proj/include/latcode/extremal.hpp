#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latcode/codes.hpp"
#include "latcode/correspond.hpp"
#include "latcode/simplex.hpp"

namespace latcode {

// Graph on {0, ..., n-1} recording the height-1 elements: {i,j} is an edge
// iff the half-half pair supported on {i,j} lies in the group. For groups of
// extremal Gorenstein simplices every connected component is complete, so
// isomorphism classes are partitions.
struct SupportGraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted

    bool has_edge(std::size_t i, std::size_t j) const;
    /// Component sizes, descending, isolated vertices included as 1s.
    std::vector<std::size_t> component_partition() const;
    /// "empty", "K2", "3K2", "K4+K2", ... (components of size 1 omitted).
    std::string label() const;
    bool operator==(const SupportGraph& other) const {
        return num_vertices == other.num_vertices && edges == other.edges;
    }
};

SupportGraph make_support_graph(std::size_t num_vertices,
                                std::vector<std::pair<std::size_t, std::size_t>> edges);

// 4-uniform hypergraph of height-2 elements in the s = 4 case; members are
// bit masks of 4-subsets of {0, ..., 2s-1}.
struct SupportHypergraph {
    std::size_t num_vertices = 0;
    std::vector<unsigned> sets;  // sorted masks, popcount 4

    bool operator==(const SupportHypergraph& other) const {
        return num_vertices == other.num_vertices && sets == other.sets;
    }
    bool operator<(const SupportHypergraph& other) const { return sets < other.sets; }
};

// Height partition H_0, ..., H_s of an extremal group.
struct HeightLevels {
    std::size_t s = 0;
    std::vector<std::vector<GroupElement>> levels;
};

/// Splits the group by height and checks the extremal structure: unique
/// all-half top element and x + H_i = H_{s-i}.
HeightLevels build_height_levels(const SimplexGroup& group, std::size_t s);

/// Edge set read off the height-1 elements; every element must be a
/// half-half pair.
SupportGraph graph_of_h1(const std::vector<GroupElement>& h1, std::size_t num_vertices);

/// Both closure rules: components complete, and the leftover pair of every
/// (s-1)-matching is an edge.
bool closure_check_graph(const SupportGraph& graph, std::size_t s);

/// All disjoint unions of complete graphs on 2s vertices passing the closure
/// rules, one per isomorphism class (partition of 2s).
std::vector<SupportGraph> admissible_graphs(std::size_t s);

// One derivation pass of the H_1/H_2 closure rules against a fixed graph.
// Forced pairs that are not edges of the graph mark the pass inconsistent.
// Complementation runs last, so a pass already pairs up what the other rules
// added.
struct HypergraphClosureStep {
    std::set<unsigned> h1;  // pair masks
    std::set<unsigned> h2;  // 4-subset masks
    bool consistent = true;
};

HypergraphClosureStep hypergraph_closure_step(const SupportGraph& graph,
                                              const std::set<unsigned>& h1,
                                              const std::set<unsigned>& h2);

/// Iterates closure steps to a fixed point; nullopt when inconsistent.
std::optional<std::set<unsigned>> close_h2(const SupportGraph& graph, std::set<unsigned> seed);

/// All H_2 sets closed under the rules and consistent with H_1 = E(G), one
/// per coordinate-permutation class fixing the graph, each validated by
/// rebuilding the group.
std::vector<SupportHypergraph> admissible_h2_sets(const SupportGraph& graph);

/// The full group determined by the lower height levels: upper levels are
/// x + H_i with x = (1/2, ..., 1/2). Throws ConsistencyError when the
/// resulting set is not closed under addition.
SimplexGroup reconstruct_group(std::size_t s, const SupportGraph& h1,
                               const std::optional<SupportHypergraph>& h2 = std::nullopt);

struct ExtremalClass {
    std::string id;
    std::size_t s = 0;
    SupportGraph graph;
    std::string graph_label;
    HStarPolynomial hstar;
    SimplexGroup group;
    CanonicalGroupForm canonical;
    BinaryCode code;
    LatticeSimplex simplex;
};

enum class ClassifyRoute { Code, Section4, Both };

/// Classification of (2s-1)-dimensional degree-s Gorenstein simplices that
/// are not lattice pyramids. route Both runs the code enumeration and the
/// height-level analysis and requires them to agree class by class.
std::vector<ExtremalClass> classify_extremal(std::size_t s, ClassifyRoute route);

}  // namespace latcode
