#pragma once

#include <map>
#include <vector>

#include "ddsx/colored_tree.hpp"
#include "ddsx/cycle_set.hpp"

namespace ddsx {

// One monomial of the left side: coefficient * X_variable^exponent. The
// variable stands for the monomial value X = x^exponent; base values are
// recovered through roots only when the exponent exceeds one.
struct Term {
    CycleSet coefficient;
    int variable = 1;
    u64 exponent = 1;

    bool operator==(const Term&) const = default;
};

// Sum of single-variable monomials equated to a known right side. Terms are
// folded so each variable appears once (coefficients of repeated variables are
// summed) and kept sorted by variable id.
class Equation {
public:
    // Validates and folds. Rejects empty term lists, empty coefficients,
    // exponent 0, and one variable used with two different exponents.
    static Equation make(std::vector<Term> terms, CycleSet rhs);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const CycleSet& rhs() const noexcept { return rhs_; }

    bool operator==(const Equation&) const = default;

private:
    std::vector<Term> terms_;
    CycleSet rhs_;
};

// A solution: the monomial value per variable, plus every base root for
// variables with exponent > 1.
struct Assignment {
    std::map<int, CycleSet> values;
    std::map<int, std::vector<CycleSet>> base_roots;

    bool operator==(const Assignment& o) const { return values == o.values; }
    bool operator<(const Assignment& o) const { return values < o.values; }
};

// Prop-4-style bracket on the number of simple-equation solves.
struct SolveBounds {
    u64 lower = 0;
    u64 upper = 0;
};

struct SolveOptions {
    // A distribution may assign zero components to a variable; set to false to
    // reject empty variable values.
    bool allow_empty_variables = true;
    u64 root_budget = kDefaultRootBudget;
    // Number of workers for distribution solving; results are identical for
    // any value.
    unsigned parallelism = 1;
};

struct SolveStats {
    u64 distributions = 0;
    // Simple-equation requests before memoization (every (cell, period) slot
    // with a nonzero target), and the unique (p, n, q) triples actually solved.
    u64 simple_solve_requests = 0;
    u64 simple_solve_unique = 0;
};

// Lazy stream over the ways to distribute each right-side period's components
// among the (coefficient component, variable) cells. For each period q_j with
// multiplicity n_j there are binom(n_j + S - 1, S - 1) splits over the S cells.
class DistributionEnumerator {
public:
    struct Cell {
        std::size_t term_index;
        u64 period;  // coefficient component period p_ij
    };

    explicit DistributionEnumerator(const Equation& eq);

    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const std::vector<CycleComponent>& rhs_entries() const noexcept { return rhs_; }

    // Fills counts[j][c] = components of rhs period j assigned to cell c.
    // Returns false once the stream is exhausted.
    bool next(std::vector<std::vector<u64>>& counts);

    // Exact number of distributions, overflow-checked.
    u64 total_count() const;

private:
    std::vector<Cell> cells_;
    std::vector<CycleComponent> rhs_;
    std::vector<std::vector<u64>> current_;
    bool started_ = false;
    bool exhausted_ = false;
};

// Complete solution set of the equation via the contraction pipeline: one
// colored-tree solve per induced simple equation, memoized across the run.
std::vector<Assignment> solve_equation(const Equation& eq, const SolveOptions& options = {},
                                       SolveStats* stats = nullptr);

// Prop-4 bracket for the rewritten equation. Requires a nonempty right side.
SolveBounds z_bounds(const Equation& eq);

// Number of RHS distributions (the product of the stars-and-bars counts).
u64 distribution_count(const Equation& eq);

// Consistency check of a full assignment: monomial values reproduce the right
// side and every recorded base root powers back to its monomial value. Throws
// missing_variable_error if a variable has no value.
bool verify_assignment(const Equation& eq, const Assignment& a);

// Left side evaluated at base-variable values (exponents applied).
CycleSet evaluate_lhs(const Equation& eq, const std::map<int, CycleSet>& base_values);

}  // namespace ddsx
