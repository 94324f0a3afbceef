#pragma once

#include <string>
#include <vector>

#include "latcoh/complex.hpp"
#include "latcoh/table.hpp"

namespace latcoh {

// A graded root: per grading level (bottom to top) the component vertices,
// each with one parent at the next level (-1 only on the top level). Merges
// keep every vertex's upward degree at 1, so the defining inequalities hold
// structurally. Vertices within a level are in canonical (builder) order.
struct GradedRoot {
    int64_t min_level = 0;
    std::vector<std::vector<int>> parent;

    int level_count() const { return static_cast<int>(parent.size()); }
    int64_t level(int k) const { return min_level + k; }
    int64_t top_level() const { return min_level + level_count() - 1; }
    int count(int k) const { return static_cast<int>(parent[static_cast<size_t>(k)].size()); }
    bool operator==(const GradedRoot&) const = default;
};

// Structural validation: parent indices in range, -1 exactly on the top
// level, at least one vertex per level.
void validate_root(const GradedRoot& r);

// Merge tree of the sublevel sets: one vertex per connected component of
// S_n per level n, from min w to the stabilization level plus one.
GradedRoot graded_root_of(const WeightTable& w);

// R_tau: the merge tree of an integer sequence (rays glued at running maxima).
GradedRoot root_from_tau(const std::vector<int64_t>& tau);

// Degree-0 module: one tail at 2 min, a piece per non-surviving branch
// under the elder rule.
UModule module_of_root(const GradedRoot& r);

// Grading-preserving isomorphism, decided by canonical encodings after
// trimming the implicit top ray.
bool root_isomorphic(const GradedRoot& a, const GradedRoot& b);

std::string to_dot(const GradedRoot& r);

} // namespace latcoh
