// ddsx — solve and analyze polynomial-style equations over the cycle
// semiring of finite discrete dynamical systems.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ddsx/bench.hpp"
#include "ddsx/colored_tree.hpp"
#include "ddsx/equation.hpp"
#include "ddsx/function_graph.hpp"
#include "ddsx/text.hpp"

namespace {

struct GlobalOptions {
    std::string format = "text";
    std::string out_path;
    unsigned parallel = 1;
    ddsx::u64 seed = 0;
    bool forbid_empty = false;
    bool trace_table = false;
    bool stats = false;
    std::optional<ddsx::u64> root_budget_flag;
};

ddsx::u64 effective_root_budget(const GlobalOptions& opts) {
    if (opts.root_budget_flag) return *opts.root_budget_flag;
    if (const char* env = std::getenv("DDSX_ROOT_BUDGET")) {
        try {
            const unsigned long long v = std::stoull(env);
            if (v == 0) throw std::invalid_argument("zero");
            return v;
        } catch (const std::exception&) {
            throw ddsx::error("DDSX_ROOT_BUDGET must be a positive integer");
        }
    }
    return ddsx::kDefaultRootBudget;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw ddsx::error("cannot open output file '" + out_path + "'");
    file << content;
}

void require_positive(ddsx::u64 value, const char* name) {
    if (value == 0)
        throw ddsx::invalid_component_error(std::string(name) + " must be >= 1");
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOptions opts;

    CLI::App app{"Equation solving over finite discrete dynamical systems "
                 "restricted to their strongly connected components"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand (inherited)
    app.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", opts.out_path, "Write output to a file instead of stdout");
    app.add_option("--parallel", opts.parallel,
                   "Worker count for equation solving (results are identical for any value)")
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "Seed for randomized sweeps (reserved)");
    app.add_option("--root-budget", opts.root_budget_flag,
                   "Candidate budget for root extraction (overrides DDSX_ROOT_BUDGET)");
    app.add_flag("--forbid-empty", opts.forbid_empty,
                 "Reject assignments that give any variable the empty system");
    app.add_flag("--trace-table", opts.trace_table,
                 "Print the colored-tree node table (solve-simple)");
    app.add_flag("--stats", opts.stats, "Print solver diagnostics to stderr");

    std::string expr_text, equation_text, system_text, assign_text;
    ddsx::u64 p = 0, n = 0, q = 0, power_w = 0;
    ddsx::u64 n_max = 0, q_max = 0, time_max = 0;
    double timeout_ms = 60'000.0;
    int repetitions = 3;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate a system expression");
    eval_cmd->add_option("expr", expr_text, "Expression, e.g. \"C(2,1) * C(3,1)\"")
        ->required();

    CLI::App* simple_cmd =
        app.add_subcommand("solve-simple", "Enumerate all X with C(p,1) * X = C(q,n)");
    simple_cmd->add_option("--p", p, "Coefficient period")->required();
    simple_cmd->add_option("--n", n, "Right-side multiplicity")->required();
    simple_cmd->add_option("--q", q, "Right-side period")->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an equation");
    solve_cmd->add_option("equation", equation_text, "e.g. \"(C(2,1)) * X1 = C(2,2)\"")
        ->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "Check an assignment");
    verify_cmd->add_option("equation", equation_text, "Equation text")->required();
    verify_cmd
        ->add_option("--assign", assign_text, "Base values, e.g. \"X1=C(1,1);X2=0\"")
        ->required();

    CLI::App* root_cmd = app.add_subcommand("root", "Extract all w-th roots of a system");
    root_cmd->add_option("--power", power_w, "Root index w")->required();
    root_cmd->add_option("system", system_text, "System text")->required();

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "Bounds on the number of simple-equation solves");
    bounds_cmd->add_option("equation", equation_text, "Equation text")->required();

    CLI::App* bench_cmd = app.add_subcommand("bench", "Benchmark harness (CSV output)");
    bench_cmd->require_subcommand(1);
    CLI::App* bench_nodes = bench_cmd->add_subcommand("nodes", "Colored-tree size sweep");
    bench_nodes->add_option("--n-max", n_max, "Largest multiplicity")->required();
    bench_nodes->add_option("--q-max", q_max, "Largest period")->required();
    CLI::App* bench_time =
        bench_cmd->add_subcommand("time", "Colored-tree vs. brute-force timing sweep");
    bench_time->add_option("--max", time_max, "Largest n and p = q")->required();
    bench_time->add_option("--timeout-ms", timeout_ms, "Per-case timeout")
        ->capture_default_str();
    bench_time->add_option("--repetitions", repetitions, "Timed runs per case")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ddsx::OutputFormat format = ddsx::parse_output_format(opts.format);

        if (*eval_cmd) {
            const ddsx::CycleSet result = ddsx::parse_expression(expr_text);
            write_output(ddsx::print_eval_result(result, format), opts.out_path);
            return 0;
        }

        if (*simple_cmd) {
            require_positive(p, "--p");
            require_positive(n, "--n");
            require_positive(q, "--q");
            ddsx::ColoredTree tree = ddsx::build_tree(p, n, q);
            const ddsx::SolutionSet solutions = ddsx::aggregate(tree);
            std::string output;
            if (opts.trace_table && format == ddsx::OutputFormat::text)
                output += ddsx::format_node_table(tree);
            else if (opts.trace_table)
                std::cerr << ddsx::format_node_table(tree);
            output += ddsx::print_solution_set(solutions, format);
            write_output(output, opts.out_path);
            if (solutions.empty()) {
                std::cerr << "no solutions\n";
                return 1;
            }
            return 0;
        }

        if (*solve_cmd) {
            const ddsx::Equation eq = ddsx::parse_equation(equation_text);
            ddsx::SolveOptions solve_opts;
            solve_opts.allow_empty_variables = !opts.forbid_empty;
            solve_opts.root_budget = effective_root_budget(opts);
            solve_opts.parallelism = opts.parallel;
            ddsx::SolveStats stats;
            const std::vector<ddsx::Assignment> assignments =
                ddsx::solve_equation(eq, solve_opts, &stats);
            if (opts.stats)
                std::cerr << "distributions: " << stats.distributions
                          << ", simple-equation requests: " << stats.simple_solve_requests
                          << ", unique solves (memoized): " << stats.simple_solve_unique
                          << "\n";
            write_output(ddsx::print_assignments(assignments, format), opts.out_path);
            if (assignments.empty()) {
                std::cerr << "no solutions\n";
                return 1;
            }
            return 0;
        }

        if (*verify_cmd) {
            const ddsx::Equation eq = ddsx::parse_equation(equation_text);
            const std::map<int, ddsx::CycleSet> bases = ddsx::parse_assignment(assign_text);
            for (const auto& [var, value] : bases) {
                bool known = false;
                for (const ddsx::Term& t : eq.terms()) known |= (t.variable == var);
                if (!known)
                    throw ddsx::error("assignment names X" + std::to_string(var) +
                                      ", which is not in the equation");
            }
            const bool ok = ddsx::evaluate_lhs(eq, bases) == eq.rhs();
            write_output(ddsx::print_verify_result(ok, format), opts.out_path);
            return 0;
        }

        if (*root_cmd) {
            require_positive(power_w, "--power");
            const ddsx::CycleSet system = ddsx::parse_system(system_text);
            const ddsx::SolutionSet roots =
                ddsx::nth_root(system, power_w, effective_root_budget(opts));
            write_output(ddsx::print_solution_set(roots, format), opts.out_path);
            if (roots.empty()) {
                std::cerr << "no solutions\n";
                return 1;
            }
            return 0;
        }

        if (*bounds_cmd) {
            const ddsx::Equation eq = ddsx::parse_equation(equation_text);
            write_output(ddsx::print_bounds(ddsx::z_bounds(eq), format), opts.out_path);
            return 0;
        }

        if (*bench_nodes) {
            require_positive(n_max, "--n-max");
            require_positive(q_max, "--q-max");
            write_output(ddsx::to_csv(ddsx::run_node_sweep(n_max, q_max)), opts.out_path);
            return 0;
        }

        if (*bench_time) {
            require_positive(time_max, "--max");
            ddsx::BenchOptions bench_opts;
            bench_opts.timeout_ms = timeout_ms;
            bench_opts.repetitions = repetitions;
            write_output(ddsx::to_csv(ddsx::run_time_comparison(time_max, bench_opts)),
                         opts.out_path);
            return 0;
        }
    } catch (const ddsx::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
