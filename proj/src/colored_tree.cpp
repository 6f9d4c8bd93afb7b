#include "ddsx/colored_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ddsx {

const TreeNode& ColoredTree::row(u64 value) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), value,
                               [](const TreeNode& r, u64 v) { return r.value < v; });
    if (it == rows_.end() || it->value != value)
        throw error("no node with value " + std::to_string(value));
    return *it;
}

std::optional<CycleSet> node_solution(u64 p, u64 q, u64 m) {
    if (p == 0 || q == 0 || m == 0)
        throw invalid_component_error("node equation parameters must be >= 1");
    const u64 qm = checked_mul(q, m);
    if (qm % p != 0) return std::nullopt;
    const u64 x = qm / p;
    if (std::gcd(p, x) != m || checked_lcm(p, x) != q) return std::nullopt;
    return CycleSet::single(x);
}

namespace {

// Build-phase state: table keyed by value plus the coin universe.
struct Builder {
    CoinSet divs;
    std::map<u64, TreeNode> table;
    int next_color = 0;
    std::deque<u64> pending;

    // Memo of the partitions representable as cuts of each value's subtree.
    // Invalidated whenever any split is added.
    std::map<u64, std::set<Partition>> cut_memo;

    void ensure_value(u64 m) {
        if (table.count(m)) return;
        TreeNode row;
        row.value = m;
        table.emplace(m, std::move(row));
        pending.push_back(m);
    }

    void add_split(u64 m, Partition parts) {
        table.at(m).splits.push_back({next_color++, parts});
        for (u64 part : parts) ensure_value(part);
        cut_memo.clear();
    }

    // Recursive MCDA pass over every value queued so far.
    void drain_mcda() {
        while (!pending.empty()) {
            const u64 m = pending.front();
            pending.pop_front();
            if (m == 1) continue;
            if (auto split = mcda(m, divs.without(m))) add_split(m, *split);
        }
    }

    // Partitions of m representable as cuts of m's subtree: pick one split and
    // replace each part either by itself or by one of its own cuts.
    const std::set<Partition>& cuts(u64 m) {
        auto it = cut_memo.find(m);
        if (it != cut_memo.end()) return it->second;

        std::set<Partition> result;
        for (const TreeSplit& split : table.at(m).splits) {
            std::set<Partition> acc = {{}};
            for (u64 part : split.parts) {
                std::set<Partition> extended;
                const auto& sub = cuts(part);  // parts are strictly smaller
                for (const Partition& prefix : acc) {
                    Partition direct = prefix;
                    direct.push_back(part);
                    std::sort(direct.begin(), direct.end(), std::greater<>());
                    extended.insert(std::move(direct));
                    for (const Partition& cut : sub) {
                        Partition merged = prefix;
                        merged.insert(merged.end(), cut.begin(), cut.end());
                        std::sort(merged.begin(), merged.end(), std::greater<>());
                        extended.insert(std::move(merged));
                    }
                }
                acc = std::move(extended);
            }
            result.insert(acc.begin(), acc.end());
        }
        return cut_memo.emplace(m, std::move(result)).first->second;
    }
};

}  // namespace

ColoredTree build_tree(u64 p, u64 n, u64 q) {
    if (p == 0 || n == 0 || q == 0)
        throw invalid_component_error("equation parameters must be >= 1");

    Builder b{divisors(q), {}, 0, {}, {}};
    b.ensure_value(n);
    b.drain_mcda();

    // Completeness: every partition of every node value must appear as a cut
    // of that value's subtree; missing ones become fresh-color splits whose
    // new values are expanded by MCDA, until a fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<u64> values;
        values.reserve(b.table.size());
        for (const auto& [value, row] : b.table) values.push_back(value);
        for (u64 m : values) {
            if (m == 1) continue;
            for (const Partition& partition : all_partitions(m, b.divs.without(m))) {
                if (b.cuts(m).count(partition)) continue;
                b.add_split(m, partition);
                b.drain_mcda();
                changed = true;
            }
        }
    }

    ColoredTree tree;
    tree.p_ = p;
    tree.q_ = q;
    tree.root_ = n;
    tree.color_count_ = b.next_color;
    tree.rows_.reserve(b.table.size());
    for (auto& [value, row] : b.table) {
        row.node_solution = node_solution(p, q, value);
        tree.rows_.push_back(std::move(row));
    }
    return tree;
}

SolutionSet aggregate(ColoredTree& tree) {
    // Rows are sorted ascending and every split part is strictly smaller than
    // its node value, so one pass suffices.
    std::map<u64, const SolutionSet*> done;
    for (TreeNode& row : tree.rows_) {
        SolutionSet result;
        if (row.node_solution) result.insert(*row.node_solution);
        for (const TreeSplit& split : row.splits) {
            // Componentwise sums over the Cartesian product of the part sets;
            // one empty operand empties the whole color.
            std::vector<CycleSet> acc = {CycleSet{}};
            for (u64 part : split.parts) {
                const SolutionSet& sub = *done.at(part);
                if (sub.empty()) {
                    acc.clear();
                    break;
                }
                std::set<CycleSet> next;
                for (const CycleSet& prefix : acc)
                    for (const CycleSet& s : sub) next.insert(add(prefix, s));
                acc.assign(next.begin(), next.end());
            }
            for (CycleSet& s : acc) result.insert(std::move(s));
        }
        row.subtree_solutions = std::move(result);
        done.emplace(row.value, &row.subtree_solutions);
    }
    tree.aggregated_ = true;
    return tree.row(tree.root_).subtree_solutions;
}

SolutionSet solve_simple(u64 p, u64 n, u64 q) {
    ColoredTree tree = build_tree(p, n, q);
    return aggregate(tree);
}

u64 count_nodes(const ColoredTree& tree) {
    std::map<u64, u64> memo;
    auto count = [&](auto&& self, u64 value) -> u64 {
        auto it = memo.find(value);
        if (it != memo.end()) return it->second;
        u64 total = 1;  // the node occurrence itself
        for (const TreeSplit& split : tree.row(value).splits)
            for (u64 part : split.parts) total = checked_add(total, self(self, part));
        memo.emplace(value, total);
        return total;
    };
    return count(count, tree.root());
}

bool verify_simple_solution(u64 p, u64 n, u64 q, const CycleSet& x) {
    return multiply(CycleSet::single(p), x) == CycleSet::single(q, n);
}

}  // namespace ddsx
