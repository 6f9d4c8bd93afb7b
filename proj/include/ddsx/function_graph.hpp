#pragma once

#include <cstdint>
#include <vector>

#include "ddsx/cycle_set.hpp"

namespace ddsx {

// Explicit dynamics graph of a finite system: a total next-state map with
// out-degree exactly one. Ground truth for the component-level formulas.
class FunctionGraph {
public:
    using State = std::uint32_t;

    FunctionGraph() = default;

    // Validates that every target is in range.
    static FunctionGraph from_next_map(std::vector<State> next);

    std::size_t size() const noexcept { return next_.size(); }
    State next(State s) const { return next_[s]; }
    const std::vector<State>& next_map() const noexcept { return next_; }

private:
    explicit FunctionGraph(std::vector<State> next) : next_(std::move(next)) {}
    std::vector<State> next_;
};

// n disjoint cycles of length p. Throws invalid_component_error on p or n = 0.
FunctionGraph build_cycle_graph(u64 p, u64 n);

// Disjoint union; states of b are offset by a.size().
FunctionGraph graph_sum(const FunctionGraph& a, const FunctionGraph& b);

// Cartesian product map on a.size() * b.size() states. State (x, y) is the
// index x * b.size() + y. Throws arithmetic_overflow_error if the state count
// does not fit the index type.
FunctionGraph graph_product(const FunctionGraph& a, const FunctionGraph& b);

// Cycle decomposition of the periodic part. Transient states are ignored.
CycleSet cycle_structure(const FunctionGraph& g);

// All X with C(p,1) * X = C(q,n), by solving the gcd-weighted composition
// problem over the divisors s of q with lcm(p, s) = q. Exact and exhaustive;
// the independent oracle for the colored-tree solver.
SolutionSet brute_force_simple_solutions(u64 p, u64 n, u64 q);

// Same solution set by generate-and-test: every multiset over the divisors of
// q with at most n components, each candidate checked by direct product
// evaluation. The naive baseline used for timing comparisons.
SolutionSet brute_force_direct_check(u64 p, u64 n, u64 q);

}  // namespace ddsx
