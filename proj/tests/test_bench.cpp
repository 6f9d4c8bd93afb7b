#include <doctest.h>

#include <map>
#include <sstream>

#include "ddsx/bench.hpp"
#include "ddsx/colored_tree.hpp"

using namespace ddsx;

TEST_CASE("node sweep fills counts for every pair") {
    const auto records = run_node_sweep(6, 6);
    REQUIRE(records.size() == 36);
    std::map<std::pair<u64, u64>, u64> grid;
    for (const BenchRecord& r : records) {
        CHECK(r.p == r.q);
        REQUIRE(r.node_count.has_value());
        ColoredTree t = build_tree(r.p, r.n, r.q);
        CHECK(*r.node_count == count_nodes(t));
        grid[{r.n, r.q}] = *r.node_count;
    }
    CHECK(grid[{1, 1}] == 1);
    CHECK(grid[{6, 6}] == 20);  // the fully drawn p=q=6 tree
}

TEST_CASE("a zero timeout marks every record without crashing") {
    BenchOptions opts;
    opts.timeout_ms = 0.0;
    opts.repetitions = 1;
    const auto records = run_time_comparison(2, opts);
    REQUIRE(records.size() == 4);
    for (const BenchRecord& r : records) {
        CHECK(r.colored_tree_timeout);
        CHECK(r.brute_force_timeout);
        CHECK(r.solution_count.has_value());  // sets were still compared
    }
    const std::string csv = to_csv(records);
    CHECK(csv.find("timeout,timeout") != std::string::npos);
}

TEST_CASE("time comparison checks both solvers continuously") {
    BenchOptions opts;
    opts.repetitions = 1;
    const auto records = run_time_comparison(4, opts);
    REQUIRE(records.size() == 16);
    for (const BenchRecord& r : records) {
        CHECK(r.colored_tree_ms.has_value());
        CHECK(r.brute_force_ms.has_value());
        REQUIRE(r.solution_count.has_value());
        CHECK(*r.solution_count == solve_simple(r.p, r.n, r.q).size());
        CHECK(*r.solution_count >= 1);  // p = q always has a solution
    }
}

TEST_CASE("even q inflates the tree in the upper range (directional only)") {
    const auto records = run_node_sweep(16, 16);
    std::map<std::pair<u64, u64>, u64> grid;
    for (const BenchRecord& r : records) grid[{r.n, r.q}] = *r.node_count;
    for (u64 n = 10; n <= 16; ++n) {
        double even = 0, odd = 0;
        for (u64 q = 10; q <= 16; q += 2) even += static_cast<double>(grid[{n, q}]) / 4;
        for (u64 q = 11; q <= 15; q += 2) odd += static_cast<double>(grid[{n, q}]) / 3;
        CHECK(even > odd);
    }
}

TEST_CASE("CSV schema is stable") {
    const auto records = run_node_sweep(2, 2);
    const std::string csv = to_csv(records);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,n,q,node_count,colored_tree_ms,brute_force_ms,solution_count");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(rows == records.size());
}

TEST_CASE("timeouts are recorded as markers") {
    BenchRecord r;
    r.p = r.n = r.q = 5;
    r.colored_tree_timeout = true;
    r.brute_force_ms = 1.5;
    const std::string csv = to_csv({r});
    CHECK(csv.find("timeout") != std::string::npos);
    CHECK(csv.find("1.5") != std::string::npos);
}
