#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ddsx/checked.hpp"

namespace ddsx {

struct BenchRecord {
    u64 p = 0, n = 0, q = 0;
    std::optional<u64> node_count;
    std::optional<double> colored_tree_ms;
    std::optional<double> brute_force_ms;
    std::optional<u64> solution_count;
    bool colored_tree_timeout = false;
    bool brute_force_timeout = false;
};

struct BenchOptions {
    // A method whose warm-up run exceeds this bound is marked timed out and
    // not repeated.
    double timeout_ms = 60'000.0;
    int repetitions = 3;  // medians over this many timed runs
};

// Colored-tree size over the (n, q) grid with p = q, so that every instance
// has at least one solution.
std::vector<BenchRecord> run_node_sweep(u64 n_max, u64 q_max);

// Colored-tree method vs. the generate-and-test brute force over n, p = q in
// [1, max]. Both solution sets are compared on every instance.
std::vector<BenchRecord> run_time_comparison(u64 max, const BenchOptions& options = {});

// Schema: p,n,q,node_count,colored_tree_ms,brute_force_ms,solution_count
// Missing values are empty fields; timeouts are written as "timeout".
std::string to_csv(const std::vector<BenchRecord>& records);

}  // namespace ddsx
