#pragma once

#include <optional>
#include <vector>

#include "ddsx/cycle_set.hpp"
#include "ddsx/decomposition.hpp"

namespace ddsx {

// One decomposition alternative of a node value. Splits of the same node are
// distinguished by color: solutions combine by Cartesian product inside one
// color and by union across colors.
struct TreeSplit {
    int color;
    Partition parts;

    bool operator==(const TreeSplit&) const = default;
};

// One table row per distinct node value m. The row stands for the node
// equation C(p,1) * X = C(q,m); its subtree solution set is shared by every
// occurrence of the value in the drawn tree.
struct TreeNode {
    u64 value = 0;
    std::vector<TreeSplit> splits;
    std::optional<CycleSet> node_solution;
    SolutionSet subtree_solutions;
};

// Decomposition table of the simple equation C(p,1) * X = C(q,n).
class ColoredTree {
public:
    u64 p() const noexcept { return p_; }
    u64 q() const noexcept { return q_; }
    u64 root() const noexcept { return root_; }

    // Rows sorted by value ascending.
    const std::vector<TreeNode>& rows() const noexcept { return rows_; }
    const TreeNode& row(u64 value) const;

    int color_count() const noexcept { return color_count_; }
    bool aggregated() const noexcept { return aggregated_; }

private:
    friend ColoredTree build_tree(u64 p, u64 n, u64 q);
    friend SolutionSet aggregate(ColoredTree& tree);

    u64 p_ = 0, q_ = 0, root_ = 0;
    std::vector<TreeNode> rows_;
    int color_count_ = 0;
    bool aggregated_ = false;
};

// Single-component solution of the node equation, C(1, (q/p)*m), present iff
// gcd(p, (q/p)*m) = m and lcm(p, (q/p)*m) = q.
std::optional<CycleSet> node_solution(u64 p, u64 q, u64 m);

// Tree building: recursive MCDA over the divisors of q (each value m uses the
// coins divisors(q) \ {m}), followed by the completeness pass that adds, under
// fresh colors, every partition of every node value not yet representable as
// a cut of that value's subtree.
ColoredTree build_tree(u64 p, u64 n, u64 q);

// Solution aggregation in increasing value order. Fills every row's subtree
// solution set and returns the root's.
SolutionSet aggregate(ColoredTree& tree);

// build_tree + aggregate. The empty set signals an impossible equation.
SolutionSet solve_simple(u64 p, u64 n, u64 q);

// Number of node occurrences in the fully drawn tree (root plus every part of
// every split, recursively expanded).
u64 count_nodes(const ColoredTree& tree);

// Linear-time membership test: multiply(C(p,1), x) == C(q,n).
bool verify_simple_solution(u64 p, u64 n, u64 q, const CycleSet& x);

}  // namespace ddsx
