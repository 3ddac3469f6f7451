#include "latcode/extremal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace latcode {

namespace {

unsigned full_mask(std::size_t n) { return (1u << n) - 1u; }

std::vector<std::size_t> mask_bits(unsigned mask) {
    std::vector<std::size_t> bits;
    for (std::size_t i = 0; mask >> i; ++i)
        if (mask & (1u << i)) bits.push_back(i);
    return bits;
}

unsigned edge_mask(std::size_t i, std::size_t j) { return (1u << i) | (1u << j); }

}  // namespace

bool SupportGraph::has_edge(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::vector<std::size_t> SupportGraph::component_partition() const {
    std::vector<std::size_t> parent(num_vertices);
    for (std::size_t i = 0; i < num_vertices; ++i) parent[i] = i;
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [i, j] : edges) parent[find(i)] = find(j);
    std::map<std::size_t, std::size_t> sizes;
    for (std::size_t i = 0; i < num_vertices; ++i) ++sizes[find(i)];
    std::vector<std::size_t> partition;
    for (const auto& [root, size] : sizes) partition.push_back(size);
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

std::string SupportGraph::label() const {
    auto partition = component_partition();
    std::ostringstream os;
    bool first = true;
    std::size_t i = 0;
    while (i < partition.size() && partition[i] >= 2) {
        std::size_t j = i;
        while (j < partition.size() && partition[j] == partition[i]) ++j;
        if (!first) os << "+";
        if (j - i > 1) os << (j - i);
        os << "K" << partition[i];
        first = false;
        i = j;
    }
    if (first) return "empty";
    return os.str();
}

SupportGraph make_support_graph(std::size_t num_vertices,
                                std::vector<std::pair<std::size_t, std::size_t>> edges) {
    for (auto& [i, j] : edges) {
        if (i > j) std::swap(i, j);
        if (i == j || j >= num_vertices) throw DimensionError("invalid edge");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SupportGraph{num_vertices, std::move(edges)};
}

HeightLevels build_height_levels(const SimplexGroup& group, std::size_t s) {
    HeightLevels out;
    out.s = s;
    out.levels.assign(s + 1, {});
    for (const auto& el : group.elements()) {
        Int h = el.height();
        if (h < 0 || h > Int(static_cast<unsigned long>(s)))
            throw PreconditionError("group has an element of height above s");
        out.levels[h.get_ui()].push_back(el);
    }
    if (out.levels[s].size() != 1)
        throw PreconditionError("group does not have a unique top element");
    const GroupElement& top = out.levels[s][0];
    const Int& q = group.denominator();
    bool all_half = q % 2 == 0 || q == 1;
    for (const Int& v : top.num)
        if (2 * v != q) all_half = false;
    if (!all_half)
        throw PreconditionError("top element is not (1/2, ..., 1/2); group is not extremal");
    for (std::size_t i = 0; i <= s; ++i) {
        // x + H_i = H_{s-i}
        for (const auto& el : out.levels[i]) {
            GroupElement shifted = el.add(top);
            const auto& target = out.levels[s - i];
            if (std::find(target.begin(), target.end(), shifted) == target.end())
                throw PreconditionError("x + H_i does not map onto H_{s-i}");
        }
    }
    return out;
}

SupportGraph graph_of_h1(const std::vector<GroupElement>& h1, std::size_t num_vertices) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& el : h1) {
        if (!el.is_half_integral() || el.support_size() != 2)
            throw ShapeError("height-1 element " + el.str() + " is not a half-half pair");
        std::size_t i = num_vertices, j = num_vertices;
        for (std::size_t c = 0; c < el.num.size(); ++c)
            if (el.num[c] != 0) {
                if (i == num_vertices)
                    i = c;
                else
                    j = c;
            }
        edges.emplace_back(i, j);
    }
    return make_support_graph(num_vertices, std::move(edges));
}

namespace {

// all matchings of exactly r disjoint edges, invoking f on each covered set
bool for_each_matching(const SupportGraph& g, std::size_t r, std::size_t first_edge,
                       unsigned covered, const std::function<bool(unsigned)>& f) {
    if (r == 0) return f(covered);
    for (std::size_t e = first_edge; e < g.edges.size(); ++e) {
        unsigned em = edge_mask(g.edges[e].first, g.edges[e].second);
        if (em & covered) continue;
        if (!for_each_matching(g, r - 1, e + 1, covered | em, f)) return false;
    }
    return true;
}

}  // namespace

bool closure_check_graph(const SupportGraph& graph, std::size_t s) {
    // rule 1: neighbors of a common vertex are adjacent
    std::vector<std::vector<std::size_t>> adj(graph.num_vertices);
    for (const auto& [i, j] : graph.edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (std::size_t v = 0; v < graph.num_vertices; ++v)
        for (std::size_t a = 0; a < adj[v].size(); ++a)
            for (std::size_t b = a + 1; b < adj[v].size(); ++b)
                if (!graph.has_edge(adj[v][a], adj[v][b])) return false;
    // rule 2: the pair left uncovered by any (s-1)-matching is an edge
    if (s == 0 || graph.num_vertices != 2 * s) return false;
    return for_each_matching(graph, s - 1, 0, 0u, [&](unsigned covered) {
        auto rest = mask_bits(full_mask(graph.num_vertices) & ~covered);
        return graph.has_edge(rest[0], rest[1]);
    });
}

namespace {

void partitions_of(std::size_t n, std::size_t max_part, std::vector<std::size_t>& current,
                   std::vector<std::vector<std::size_t>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t p = std::min(n, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_of(n - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<SupportGraph> admissible_graphs(std::size_t s) {
    if (s < 1 || s > 5) throw RangeError("admissible graph enumeration supports s in 1..5");
    std::vector<std::vector<std::size_t>> partitions;
    std::vector<std::size_t> current;
    partitions_of(2 * s, 2 * s, current, partitions);
    std::vector<SupportGraph> out;
    for (const auto& partition : partitions) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::size_t base = 0;
        for (std::size_t part : partition) {
            for (std::size_t i = 0; i < part; ++i)
                for (std::size_t j = i + 1; j < part; ++j) edges.emplace_back(base + i, base + j);
            base += part;
        }
        SupportGraph g = make_support_graph(2 * s, std::move(edges));
        if (closure_check_graph(g, s)) out.push_back(std::move(g));
    }
    return out;
}

HypergraphClosureStep hypergraph_closure_step(const SupportGraph& graph,
                                              const std::set<unsigned>& h1,
                                              const std::set<unsigned>& h2) {
    const std::size_t n = graph.num_vertices;
    const unsigned full = full_mask(n);
    HypergraphClosureStep out;
    out.h1 = h1;
    out.h2 = h2;

    auto force_pair = [&](unsigned mask) {
        out.h1.insert(mask);
        auto bits = mask_bits(mask);
        if (bits.size() != 2 || !graph.has_edge(bits[0], bits[1])) out.consistent = false;
    };

    // (2) disjoint edges produce a 4-set
    std::vector<unsigned> pairs(out.h1.begin(), out.h1.end());
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b)
            if (!(pairs[a] & pairs[b])) out.h2.insert(pairs[a] | pairs[b]);

    // (3) a 4-set against an edge
    {
        std::vector<unsigned> quads(out.h2.begin(), out.h2.end());
        for (unsigned a : quads)
            for (unsigned e : pairs) {
                const int overlap = std::popcount(a & e);
                if (overlap == 1)
                    out.h2.insert(a ^ e);
                else if (overlap == 2)
                    force_pair(a & ~e);
                else if (overlap == 0)
                    force_pair(full & ~(a | e));
            }
    }

    // (4) two 4-sets
    {
        std::vector<unsigned> quads(out.h2.begin(), out.h2.end());
        for (std::size_t a = 0; a < quads.size(); ++a)
            for (std::size_t b = a + 1; b < quads.size(); ++b) {
                const int overlap = std::popcount(quads[a] & quads[b]);
                if (overlap == 3)
                    force_pair(quads[a] ^ quads[b]);
                else if (overlap == 2)
                    out.h2.insert(quads[a] ^ quads[b]);
                else if (overlap == 1)
                    force_pair(full & ~(quads[a] ^ quads[b]));
            }
    }

    // (1) complement closure, last so this pass pairs up fresh additions
    {
        std::vector<unsigned> quads(out.h2.begin(), out.h2.end());
        for (unsigned a : quads) out.h2.insert(full & ~a);
    }
    return out;
}

std::optional<std::set<unsigned>> close_h2(const SupportGraph& graph, std::set<unsigned> seed) {
    std::set<unsigned> h1;
    for (const auto& [i, j] : graph.edges) h1.insert(edge_mask(i, j));
    for (;;) {
        auto step = hypergraph_closure_step(graph, h1, seed);
        if (!step.consistent) return std::nullopt;
        if (step.h2 == seed) return seed;
        seed = std::move(step.h2);
    }
}

namespace {

SimplexGroup group_from_masks(std::size_t n, const std::set<unsigned>& masks) {
    std::vector<std::vector<Int>> numerators;
    for (unsigned mask : masks) {
        std::vector<Int> num(n, Int(0));
        for (std::size_t j = 0; j < n; ++j)
            if (mask & (1u << j)) num[j] = 1;
        numerators.push_back(std::move(num));
    }
    return SimplexGroup::from_elements(n, Int(2), std::move(numerators));
}

}  // namespace

SimplexGroup reconstruct_group(std::size_t s, const SupportGraph& h1,
                               const std::optional<SupportHypergraph>& h2) {
    if (s < 1 || s > 5) throw RangeError("reconstruction supports s in 1..5");
    const std::size_t n = 2 * s;
    if (h1.num_vertices != n) throw DimensionError("graph must live on 2s vertices");
    const bool needs_h2 = s >= 4;
    if (needs_h2 && !h2) throw DimensionError("s >= 4 needs the height-2 level");

    // x + H_i fills level s - i; the middle level (i = s - i) must already be
    // closed under complementation, which the addition check below enforces
    const unsigned full = full_mask(n);
    std::set<unsigned> masks{0u, full};
    for (const auto& [i, j] : h1.edges) {
        masks.insert(edge_mask(i, j));
        if (s > 2) masks.insert(full & ~edge_mask(i, j));
    }
    if (needs_h2) {
        if (h2->num_vertices != n) throw DimensionError("hypergraph must live on 2s vertices");
        for (unsigned a : h2->sets) {
            if (std::popcount(a) != 4 || (a & ~full))
                throw ShapeError("height-2 members must be 4-subsets of the coordinates");
            masks.insert(a);
            if (s > 4) masks.insert(full & ~a);
        }
    }
    for (unsigned a : masks)
        for (unsigned b : masks)
            if (!masks.count(a ^ b))
                throw ConsistencyError("height levels do not generate a closed group");
    return group_from_masks(n, masks);
}

namespace {

ExtremalClass build_class(std::size_t s, const SimplexGroup& group) {
    ExtremalClass cls;
    cls.s = s;
    cls.canonical = canonical_group(group);
    cls.group = SimplexGroup::from_elements(cls.canonical.length, cls.canonical.q,
                                            cls.canonical.elements);
    cls.hstar = hstar_from_group(cls.group);
    auto levels = build_height_levels(cls.group, s);
    cls.graph = graph_of_h1(levels.levels[1], cls.group.length());
    cls.graph_label = cls.graph.label();
    cls.code = group_to_code(cls.group);
    cls.simplex = simplex_from_group(cls.group);
    return cls;
}

bool class_order(const ExtremalClass& a, const ExtremalClass& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    auto pa = a.graph.component_partition();
    auto pb = b.graph.component_partition();
    if (pa != pb) return pa < pb;
    return a.canonical < b.canonical;
}

}  // namespace

std::vector<SupportHypergraph> admissible_h2_sets(const SupportGraph& graph) {
    if (graph.num_vertices != 8)
        throw RangeError("the height-2 case analysis lives on 8 coordinates (s = 4)");
    auto base = close_h2(graph, {});
    if (!base) return {};

    std::vector<unsigned> universe;
    for (unsigned a = 0; a < (1u << 8); ++a)
        if (std::popcount(a) == 4) universe.push_back(a);

    std::set<std::set<unsigned>> found{*base};
    std::queue<std::set<unsigned>> work;
    work.push(*base);
    while (!work.empty()) {
        auto current = std::move(work.front());
        work.pop();
        for (unsigned a : universe) {
            if (current.count(a)) continue;
            auto seed = current;
            seed.insert(a);
            auto closed = close_h2(graph, std::move(seed));
            if (!closed) continue;
            if (found.insert(*closed).second) work.push(std::move(*closed));
        }
    }

    // keep one representative per permutation class, validated as a group
    std::map<CanonicalGroupForm, SupportHypergraph> reps;
    for (const auto& candidate : found) {
        SupportHypergraph hg{8, std::vector<unsigned>(candidate.begin(), candidate.end())};
        SimplexGroup group;
        try {
            group = reconstruct_group(4, graph, hg);
        } catch (const ConsistencyError&) {
            continue;  // closed under the rules but not an actual group
        }
        auto canon = canonical_group(group);
        auto it = reps.find(canon);
        if (it == reps.end() || hg < it->second) reps.insert_or_assign(canon, std::move(hg));
    }
    std::vector<SupportHypergraph> out;
    for (const auto& [canon, hg] : reps) out.push_back(hg);
    std::sort(out.begin(), out.end(), [](const SupportHypergraph& a, const SupportHypergraph& b) {
        if (a.sets.size() != b.sets.size()) return a.sets.size() < b.sets.size();
        return a.sets < b.sets;
    });
    return out;
}

std::vector<ExtremalClass> classify_extremal(std::size_t s, ClassifyRoute route) {
    if (s < 1 || s > 5) throw RangeError("classification supports s in 1..5");
    if (route != ClassifyRoute::Code && s > 4)
        throw RangeError("the height-level route supports s <= 4");

    std::vector<ExtremalClass> code_classes;
    if (route == ClassifyRoute::Code || route == ClassifyRoute::Both) {
        for (const auto& code : enumerate_escc(2 * s))
            code_classes.push_back(build_class(s, code_to_group(code)));
        std::sort(code_classes.begin(), code_classes.end(), class_order);
    }

    std::vector<ExtremalClass> level_classes;
    if (route == ClassifyRoute::Section4 || route == ClassifyRoute::Both) {
        std::map<CanonicalGroupForm, SimplexGroup> groups;
        for (const auto& graph : admissible_graphs(s)) {
            if (s >= 4) {
                for (const auto& hg : admissible_h2_sets(graph)) {
                    SimplexGroup g = reconstruct_group(s, graph, hg);
                    groups.emplace(canonical_group(g), std::move(g));
                }
            } else {
                SimplexGroup g = reconstruct_group(s, graph);
                groups.emplace(canonical_group(g), std::move(g));
            }
        }
        for (const auto& [canon, group] : groups) level_classes.push_back(build_class(s, group));
        std::sort(level_classes.begin(), level_classes.end(), class_order);
    }

    if (route == ClassifyRoute::Both) {
        bool agree = code_classes.size() == level_classes.size();
        for (std::size_t i = 0; agree && i < code_classes.size(); ++i)
            agree = code_classes[i].canonical == level_classes[i].canonical;
        if (!agree) {
            std::ostringstream os;
            os << "code route found " << code_classes.size() << " classes, height-level route "
               << level_classes.size() << "; h* lists:";
            for (const auto& c : code_classes) os << " [" << c.hstar.str() << "]";
            os << " vs";
            for (const auto& c : level_classes) os << " [" << c.hstar.str() << "]";
            throw ConsistencyError(os.str());
        }
    }

    auto& classes = (route == ClassifyRoute::Section4) ? level_classes : code_classes;
    for (std::size_t i = 0; i < classes.size(); ++i)
        classes[i].id = "s" + std::to_string(s) + "-" + std::to_string(i + 1);
    return classes;
}

}  // namespace latcode
