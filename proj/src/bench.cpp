#include "ddsx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ddsx/colored_tree.hpp"
#include "ddsx/function_graph.hpp"

namespace ddsx {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// Warm-up run first (discarded, doubles as the timeout probe), then the
// median of `repetitions` timed runs.
template <typename Solve>
std::optional<double> time_solver(Solve&& solve, const BenchOptions& options,
                                  SolutionSet& result) {
    auto start = std::chrono::steady_clock::now();
    result = solve();
    if (elapsed_ms(start) > options.timeout_ms) return std::nullopt;

    std::vector<double> runs;
    runs.reserve(options.repetitions);
    for (int r = 0; r < options.repetitions; ++r) {
        start = std::chrono::steady_clock::now();
        SolutionSet again = solve();
        runs.push_back(elapsed_ms(start));
    }
    std::sort(runs.begin(), runs.end());
    return runs[runs.size() / 2];
}

}  // namespace

std::vector<BenchRecord> run_node_sweep(u64 n_max, u64 q_max) {
    if (n_max == 0 || q_max == 0)
        throw invalid_component_error("sweep bounds must be >= 1");
    std::vector<BenchRecord> records;
    records.reserve(n_max * q_max);
    for (u64 q = 1; q <= q_max; ++q) {
        for (u64 n = 1; n <= n_max; ++n) {
            ColoredTree tree = build_tree(q, n, q);
            BenchRecord rec;
            rec.p = q;
            rec.n = n;
            rec.q = q;
            rec.node_count = count_nodes(tree);
            rec.solution_count = aggregate(tree).size();
            records.push_back(rec);
        }
    }
    return records;
}

std::vector<BenchRecord> run_time_comparison(u64 max, const BenchOptions& options) {
    if (max == 0) throw invalid_component_error("sweep bound must be >= 1");
    std::vector<BenchRecord> records;
    records.reserve(max * max);
    for (u64 q = 1; q <= max; ++q) {
        for (u64 n = 1; n <= max; ++n) {
            BenchRecord rec;
            rec.p = q;
            rec.n = n;
            rec.q = q;

            SolutionSet tree_result, brute_result;
            rec.colored_tree_ms =
                time_solver([&] { return solve_simple(q, n, q); }, options, tree_result);
            rec.colored_tree_timeout = !rec.colored_tree_ms.has_value();
            rec.brute_force_ms = time_solver(
                [&] { return brute_force_direct_check(q, n, q); }, options, brute_result);
            rec.brute_force_timeout = !rec.brute_force_ms.has_value();

            if (tree_result != brute_result)
                throw error("solver mismatch at p=q=" + std::to_string(q) +
                            ", n=" + std::to_string(n));
            rec.solution_count = tree_result.size();
            records.push_back(rec);
        }
    }
    return records;
}

std::string to_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "p,n,q,node_count,colored_tree_ms,brute_force_ms,solution_count\n";
    for (const BenchRecord& r : records) {
        out << r.p << "," << r.n << "," << r.q << ",";
        if (r.node_count) out << *r.node_count;
        out << ",";
        if (r.colored_tree_timeout)
            out << "timeout";
        else if (r.colored_tree_ms)
            out << *r.colored_tree_ms;
        out << ",";
        if (r.brute_force_timeout)
            out << "timeout";
        else if (r.brute_force_ms)
            out << *r.brute_force_ms;
        out << ",";
        if (r.solution_count) out << *r.solution_count;
        out << "\n";
    }
    return out.str();
}

}  // namespace ddsx
