#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace latcode::detail {

// Canonical column order for a matrix whose rows form a set (the row order
// carries no information). Minimizes, over all column permutations, the
// graded sequence
//
//   (sorted 1-column prefixes, sorted 2-column prefixes, ..., sorted rows),
//
// where the grade-t entry is the value list of the column placed at
// position t, read along rows ordered by their (t-1)-column prefix. Any two
// permutations attaining the minimum produce the same sorted row list, so
// the result is a well-defined canonical form: invariant under column
// permutation of the input, equal across inputs iff they agree up to a
// column permutation.
//
// Search: depth-first over column choices. At a node only candidates whose
// value sequence is minimal can extend to the minimum, so the rest are
// pruned; candidates with identical full columns are interchangeable and
// only one is explored; a node that is already lexicographically above the
// incumbent is cut.
template <typename Value>
struct CanonicalColumns {
    std::vector<std::size_t> perm;           // position -> original column
    std::vector<std::vector<Value>> rows;    // canonical sorted row list
};

template <typename Value>
CanonicalColumns<Value> canonical_columns(const std::vector<std::vector<Value>>& input) {
    const std::size_t m = input.size();
    const std::size_t n = input.empty() ? 0 : input[0].size();

    CanonicalColumns<Value> best;
    std::vector<std::vector<Value>> best_levels;
    bool have_best = false;

    std::vector<std::vector<Value>> path_levels(n);
    std::vector<std::size_t> path_perm(n);

    struct Candidate {
        std::size_t col;
        std::vector<Value> seq;
        std::vector<std::size_t> order;
        std::vector<std::size_t> group;
    };

    // order: row indices sorted by the chosen prefix; group: prefix-class ids
    auto dfs = [&](auto&& self, const std::vector<std::size_t>& order,
                   const std::vector<std::size_t>& group, std::vector<bool>& used,
                   std::size_t depth, bool tight) -> void {
        if (depth == n) {
            bool better = !have_best;
            if (have_best && !tight) {
                for (std::size_t t = 0; t < n; ++t) {
                    if (path_levels[t] == best_levels[t]) continue;
                    better = path_levels[t] < best_levels[t];
                    break;
                }
            }
            if (better) {
                best_levels = path_levels;
                best.perm = path_perm;
                best.rows.assign(m, std::vector<Value>(n));
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t t = 0; t < n; ++t) best.rows[i][t] = input[order[i]][path_perm[t]];
                have_best = true;
            }
            return;
        }

        std::vector<Candidate> candidates;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            Candidate cand;
            cand.col = c;
            cand.order.reserve(m);
            cand.group.resize(m);
            cand.seq.reserve(m);
            std::size_t i = 0;
            while (i < m) {
                std::size_t j = i;
                while (j < m && group[j] == group[i]) ++j;
                std::vector<std::size_t> seg(order.begin() + static_cast<std::ptrdiff_t>(i),
                                             order.begin() + static_cast<std::ptrdiff_t>(j));
                std::stable_sort(seg.begin(), seg.end(), [&](std::size_t a, std::size_t b) {
                    return input[a][c] < input[b][c];
                });
                cand.order.insert(cand.order.end(), seg.begin(), seg.end());
                i = j;
            }
            std::size_t gid = 0;
            for (std::size_t t = 0; t < m; ++t) {
                cand.seq.push_back(input[cand.order[t]][c]);
                if (t > 0 && (group[t] != group[t - 1] || cand.seq[t] != cand.seq[t - 1])) ++gid;
                cand.group[t] = gid;
            }
            candidates.push_back(std::move(cand));
        }

        const std::vector<Value>* min_seq = nullptr;
        for (const auto& cand : candidates)
            if (!min_seq || cand.seq < *min_seq) min_seq = &cand.seq;

        bool child_tight = tight;
        if (have_best && tight) {
            if (*min_seq > best_levels[depth]) return;
            if (*min_seq < best_levels[depth]) child_tight = false;
        }

        // interchangeable candidates: identical full column content
        std::vector<std::vector<Value>> seen_columns;
        for (const auto& cand : candidates) {
            if (cand.seq != *min_seq) continue;
            std::vector<Value> column(m);
            for (std::size_t i = 0; i < m; ++i) column[i] = input[order[i]][cand.col];
            if (std::find(seen_columns.begin(), seen_columns.end(), column) != seen_columns.end())
                continue;
            seen_columns.push_back(std::move(column));

            path_levels[depth] = cand.seq;
            path_perm[depth] = cand.col;
            used[cand.col] = true;
            self(self, cand.order, cand.group, used, depth + 1, child_tight);
            used[cand.col] = false;
        }
    };

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    std::vector<std::size_t> group(m, 0);
    std::vector<bool> used(n, false);
    if (n == 0) {
        best.rows.assign(m, {});
        return best;
    }
    dfs(dfs, order, group, used, 0, true);
    return best;
}

}  // namespace latcode::detail
