#include "ddsx/equation.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace ddsx {

Equation Equation::make(std::vector<Term> terms, CycleSet rhs) {
    if (terms.empty()) throw error("an equation needs at least one term");
    std::map<int, Term> folded;
    for (Term& t : terms) {
        if (t.coefficient.empty())
            throw error("term coefficient must be a nonempty system");
        if (t.exponent == 0) throw error("exponent must be >= 1");
        auto [it, inserted] = folded.emplace(t.variable, t);
        if (!inserted) {
            if (it->second.exponent != t.exponent)
                throw error("variable X" + std::to_string(t.variable) +
                            " used with two different exponents");
            it->second.coefficient = add(it->second.coefficient, t.coefficient);
        }
    }
    Equation eq;
    for (auto& [var, term] : folded) eq.terms_.push_back(std::move(term));
    eq.rhs_ = std::move(rhs);
    return eq;
}

DistributionEnumerator::DistributionEnumerator(const Equation& eq)
    : rhs_(eq.rhs().components()) {
    // Cells ordered by (variable index, coefficient period ascending); an
    // entry of multiplicity k expands into k cells.
    for (std::size_t i = 0; i < eq.terms().size(); ++i)
        for (const auto& comp : eq.terms()[i].coefficient.components())
            for (u64 r = 0; r < comp.count; ++r) cells_.push_back({i, comp.period});
}

namespace {

// Advances one weak composition (fixed sum) to its successor; false at the end.
bool next_composition(std::vector<u64>& k) {
    const std::size_t m = k.size();
    if (m == 1) return false;
    std::size_t j = m - 2;
    while (k[j] == 0) {
        if (j == 0) return false;  // (0,...,0,n) is last
        --j;
    }
    const u64 tail = k[m - 1];
    k[m - 1] = 0;
    --k[j];
    k[j + 1] = tail + 1;
    return true;
}

}  // namespace

bool DistributionEnumerator::next(std::vector<std::vector<u64>>& counts) {
    if (exhausted_) return false;
    if (!started_) {
        started_ = true;
        current_.assign(rhs_.size(), std::vector<u64>(cells_.size(), 0));
        for (std::size_t j = 0; j < rhs_.size(); ++j) current_[j][0] = rhs_[j].count;
        counts = current_;
        return true;
    }
    // Odometer across the per-period composition streams.
    for (std::size_t j = 0; j < rhs_.size(); ++j) {
        if (next_composition(current_[j])) {
            counts = current_;
            return true;
        }
        current_[j].assign(cells_.size(), 0);
        current_[j][0] = rhs_[j].count;
    }
    exhausted_ = true;
    return false;
}

u64 DistributionEnumerator::total_count() const {
    u64 total = 1;
    const u64 s = cells_.size();
    for (const auto& entry : rhs_)
        total = checked_mul(total, binomial(checked_add(entry.count, s - 1), s - 1));
    return total;
}

u64 distribution_count(const Equation& eq) {
    return DistributionEnumerator(eq).total_count();
}

SolveBounds z_bounds(const Equation& eq) {
    if (eq.rhs().empty())
        throw error("z_bounds requires a nonempty right side");
    u64 cell_count = 0;
    for (const Term& t : eq.terms())
        cell_count = checked_add(cell_count, t.coefficient.total_components());
    const u64 m = eq.rhs().entry_count();
    const u64 lower = checked_mul(distribution_count(eq), m);
    return {lower, checked_mul(lower, cell_count)};
}

CycleSet evaluate_lhs(const Equation& eq, const std::map<int, CycleSet>& base_values) {
    CycleSet total;
    for (const Term& t : eq.terms()) {
        auto it = base_values.find(t.variable);
        if (it == base_values.end())
            throw missing_variable_error("no value for variable X" +
                                         std::to_string(t.variable));
        total = add(total, multiply(t.coefficient, power(it->second, t.exponent)));
    }
    return total;
}

bool verify_assignment(const Equation& eq, const Assignment& a) {
    CycleSet total;
    for (const Term& t : eq.terms()) {
        auto it = a.values.find(t.variable);
        if (it == a.values.end())
            throw missing_variable_error("no value for variable X" +
                                         std::to_string(t.variable));
        total = add(total, multiply(t.coefficient, it->second));
        if (t.exponent > 1) {
            auto roots = a.base_roots.find(t.variable);
            if (roots == a.base_roots.end() || roots->second.empty()) return false;
            for (const CycleSet& r : roots->second)
                if (power(r, t.exponent) != it->second) return false;
        }
    }
    return total == eq.rhs();
}

namespace {

struct SimpleKey {
    u64 p, n, q;
    auto operator<=>(const SimpleKey&) const = default;
};

// Shared across distributions (and worker threads) of one solve_equation run.
struct SolverContext {
    SolverContext(const Equation& e, const SolveOptions& o) : eq(e), options(o) {}

    const Equation& eq;
    const SolveOptions& options;
    std::vector<DistributionEnumerator::Cell> cells;
    std::vector<CycleComponent> rhs;
    std::vector<std::vector<std::size_t>> cells_of_term;

    std::mutex memo_mutex;
    std::map<SimpleKey, SolutionSet> simple_memo;
    std::map<std::pair<CycleSet, u64>, std::vector<CycleSet>> root_memo;

    std::atomic<u64> requests{0};
    std::atomic<u64> unique_solves{0};

    const SolutionSet& simple_solutions(u64 p, u64 n, u64 q) {
        requests.fetch_add(1, std::memory_order_relaxed);
        std::lock_guard lock(memo_mutex);
        auto [it, inserted] = simple_memo.try_emplace({p, n, q});
        if (inserted) {
            it->second = solve_simple(p, n, q);
            unique_solves.fetch_add(1, std::memory_order_relaxed);
        }
        return it->second;
    }

    const std::vector<CycleSet>& roots(const CycleSet& value, u64 exponent) {
        std::lock_guard lock(memo_mutex);
        auto [it, inserted] = root_memo.try_emplace({value, exponent});
        if (inserted)
            it->second = nth_root(value, exponent, options.root_budget).items();
        return it->second;
    }
};

// Candidate monomial values for one variable under one distribution: the
// componentwise sums over the per-period solution sets of each cell, then the
// intersection across the variable's cells.
std::vector<CycleSet> variable_candidates(
    SolverContext& ctx, const std::vector<std::vector<const SolutionSet*>>& slots,
    std::size_t term_index) {
    const Term& term = ctx.eq.terms()[term_index];
    std::vector<CycleSet> candidates;
    bool first_cell = true;
    for (std::size_t c : ctx.cells_of_term[term_index]) {
        std::vector<CycleSet> cell_set = {CycleSet{}};
        for (std::size_t j = 0; j < ctx.rhs.size(); ++j) {
            const SolutionSet* per_period = slots[c][j];
            if (per_period == nullptr) continue;  // zero allocation
            if (per_period->empty()) return {};
            std::vector<CycleSet> extended;
            extended.reserve(cell_set.size() * per_period->size());
            for (const CycleSet& prefix : cell_set)
                for (const CycleSet& s : *per_period) extended.push_back(add(prefix, s));
            cell_set = std::move(extended);
        }
        std::sort(cell_set.begin(), cell_set.end());
        cell_set.erase(std::unique(cell_set.begin(), cell_set.end()), cell_set.end());

        if (first_cell) {
            candidates = std::move(cell_set);
            first_cell = false;
        } else {
            std::vector<CycleSet> intersection;
            std::set_intersection(candidates.begin(), candidates.end(), cell_set.begin(),
                                  cell_set.end(), std::back_inserter(intersection));
            candidates = std::move(intersection);
        }
        if (candidates.empty()) return {};
    }
    if (!ctx.options.allow_empty_variables)
        std::erase_if(candidates, [](const CycleSet& s) { return s.empty(); });
    if (term.exponent > 1)
        std::erase_if(candidates,
                      [&](const CycleSet& s) { return ctx.roots(s, term.exponent).empty(); });
    return candidates;
}

void solve_distribution(SolverContext& ctx, const std::vector<std::vector<u64>>& counts,
                        std::set<Assignment>& out) {
    // Materialize every allocated (cell, period) simple equation first: the
    // request count of a distribution is its full contraction footprint, and
    // the memo makes the repeat lookups below free.
    std::vector<std::vector<const SolutionSet*>> slots(
        ctx.cells.size(), std::vector<const SolutionSet*>(ctx.rhs.size(), nullptr));
    for (std::size_t c = 0; c < ctx.cells.size(); ++c)
        for (std::size_t j = 0; j < ctx.rhs.size(); ++j)
            if (counts[j][c] > 0)
                slots[c][j] =
                    &ctx.simple_solutions(ctx.cells[c].period, counts[j][c], ctx.rhs[j].period);

    const std::size_t nvars = ctx.eq.terms().size();
    std::vector<std::vector<CycleSet>> per_var(nvars);
    for (std::size_t i = 0; i < nvars; ++i) {
        per_var[i] = variable_candidates(ctx, slots, i);
        if (per_var[i].empty()) return;
    }

    std::vector<std::size_t> pick(nvars, 0);
    for (;;) {
        Assignment a;
        for (std::size_t i = 0; i < nvars; ++i) {
            const Term& t = ctx.eq.terms()[i];
            a.values.emplace(t.variable, per_var[i][pick[i]]);
            if (t.exponent > 1)
                a.base_roots.emplace(t.variable, ctx.roots(per_var[i][pick[i]], t.exponent));
        }
        if (verify_assignment(ctx.eq, a)) out.insert(std::move(a));

        std::size_t i = 0;
        for (; i < nvars; ++i) {
            if (++pick[i] < per_var[i].size()) break;
            pick[i] = 0;
        }
        if (i == nvars) break;
    }
}

}  // namespace

std::vector<Assignment> solve_equation(const Equation& eq, const SolveOptions& options,
                                       SolveStats* stats) {
    SolverContext ctx(eq, options);
    DistributionEnumerator enumerator(eq);
    ctx.cells = enumerator.cells();
    ctx.rhs = enumerator.rhs_entries();
    ctx.cells_of_term.assign(eq.terms().size(), {});
    for (std::size_t c = 0; c < ctx.cells.size(); ++c)
        ctx.cells_of_term[ctx.cells[c].term_index].push_back(c);

    std::set<Assignment> result;
    u64 distributions = 0;

    if (eq.rhs().empty()) {
        // Degenerate equation: with nonempty coefficients the left side is
        // empty exactly when every variable is empty.
        if (options.allow_empty_variables) {
            Assignment a;
            for (const Term& t : eq.terms()) {
                a.values.emplace(t.variable, CycleSet{});
                if (t.exponent > 1)
                    a.base_roots.emplace(t.variable, std::vector<CycleSet>{CycleSet{}});
            }
            result.insert(std::move(a));
        }
    } else if (options.parallelism <= 1) {
        std::vector<std::vector<u64>> counts;
        while (enumerator.next(counts)) {
            ++distributions;
            solve_distribution(ctx, counts, result);
        }
    } else {
        std::mutex stream_mutex;
        std::vector<std::set<Assignment>> partial(options.parallelism);
        std::vector<std::thread> workers;
        workers.reserve(options.parallelism);
        std::exception_ptr failure;
        for (unsigned w = 0; w < options.parallelism; ++w) {
            workers.emplace_back([&, w] {
                try {
                    std::vector<std::vector<u64>> counts;
                    for (;;) {
                        {
                            std::lock_guard lock(stream_mutex);
                            if (failure || !enumerator.next(counts)) return;
                            ++distributions;
                        }
                        solve_distribution(ctx, counts, partial[w]);
                    }
                } catch (...) {
                    std::lock_guard lock(stream_mutex);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        if (failure) std::rethrow_exception(failure);
        for (auto& p : partial) result.merge(p);
    }

    if (stats) {
        stats->distributions = distributions;
        stats->simple_solve_requests = ctx.requests.load();
        stats->simple_solve_unique = ctx.unique_solves.load();
    }
    return {result.begin(), result.end()};
}

}  // namespace ddsx
