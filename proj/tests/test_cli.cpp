#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "test_support.hpp"

using ddsx::testing::CliResult;
using ddsx::testing::run_cli;

TEST_CASE("eval evaluates expressions") {
    const CliResult r = run_cli("eval \"C(2,1) * C(3,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "C(6,1)\n");

    const CliResult scalar = run_cli("eval \"3 * C(2,1)\"");
    CHECK(scalar.exit_code == 0);
    CHECK(scalar.output == "C(2,3)\n");
}

TEST_CASE("solve-simple reproduces the worked tables through the CLI") {
    const CliResult table1 = run_cli("solve-simple --p 6 --n 6 --q 6");
    CHECK(table1.exit_code == 0);
    CHECK(table1.output ==
          "C(1,1) + C(2,1) + C(3,1)\n"
          "C(1,2) + C(2,2)\n"
          "C(1,3) + C(3,1)\n"
          "C(1,4) + C(2,1)\n"
          "C(1,6)\n"
          "C(2,3)\n"
          "C(3,2)\n"
          "C(6,1)\n");

    const CliResult table2 = run_cli("solve-simple --p 2 --n 5 --q 4");
    CHECK(table2.exit_code == 1);
    CHECK(table2.output.empty());

    const CliResult table3 = run_cli("solve-simple --p 2 --n 12 --q 6");
    CHECK(table3.exit_code == 0);
    CHECK(table3.output.find("C(6,6)\n") != std::string::npos);
}

TEST_CASE("json output follows the documented schema") {
    const CliResult r = run_cli("--format json solve-simple --p 2 --n 5 --q 4");
    CHECK(r.exit_code == 1);
    CHECK(nlohmann::json::parse(r.output) == nlohmann::json::parse("{\"solutions\":[]}"));

    const CliResult t1 = run_cli("--format json solve-simple --p 6 --n 6 --q 6");
    const auto j = nlohmann::json::parse(t1.output);
    CHECK(j["solutions"].size() == 8);

    const CliResult ev = run_cli("--format json eval \"C(2,2) * C(4,3)\"");
    const auto je = nlohmann::json::parse(ev.output);
    CHECK(je["system"][0]["period"] == 4);
    CHECK(je["system"][0]["count"] == 12);
}

TEST_CASE("trace table prints the node table layout") {
    const CliResult r = run_cli("--trace-table solve-simple --p 6 --n 6 --q 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("Node | Splits | Node solution | Subtree solutions set\n") == 0);
    CHECK(r.output.find("6 | [3,3] [2,2,2] | C(6,1) | {") != std::string::npos);
}

TEST_CASE("solve, verify, root and bounds subcommands") {
    const CliResult solve = run_cli("solve \"(C(2,1)) * X1 = C(2,2)\"");
    CHECK(solve.exit_code == 0);
    CHECK(solve.output == "X1 = C(1,2)\nX1 = C(2,1)\n");

    const CliResult none = run_cli("solve \"(C(2,1)) * X1 = C(3,1)\"");
    CHECK(none.exit_code == 1);

    const CliResult vtrue =
        run_cli("verify \"(C(2,1)) * X1 = C(2,2)\" --assign \"X1=C(2,1)\"");
    CHECK(vtrue.exit_code == 0);
    CHECK(vtrue.output == "true\n");

    const CliResult vfalse =
        run_cli("verify \"(C(2,1)) * X1 = C(2,2)\" --assign \"X1=C(3,1)\"");
    CHECK(vfalse.exit_code == 0);
    CHECK(vfalse.output == "false\n");

    const CliResult vexp =
        run_cli("verify \"(C(1,1)) * X1^2 = C(1,1) + C(2,4)\" --assign \"X1=C(1,1)+C(2,1)\"");
    CHECK(vexp.exit_code == 0);
    CHECK(vexp.output == "true\n");

    const CliResult root = run_cli("root --power 2 \"C(1,1) + C(2,4)\"");
    CHECK(root.exit_code == 0);
    CHECK(root.output == "C(1,1) + C(2,1)\n");

    const CliResult noroot = run_cli("root --power 2 \"C(2,1)\"");
    CHECK(noroot.exit_code == 1);

    const CliResult bounds = run_cli("bounds \"(C(2,1) + C(3,1)) * X1 = C(2,2) + C(3,1)\"");
    CHECK(bounds.exit_code == 0);
    CHECK(bounds.output == "lower = 12\nupper = 24\n");
}

TEST_CASE("exit codes distinguish usage, parse and parameter errors") {
    CHECK(run_cli("definitely-not-a-command").exit_code == 2);
    CHECK(run_cli("solve-simple --p 6 --n 6").exit_code == 2);        // missing --q
    CHECK(run_cli("eval \"C(2\"").exit_code == 2);                    // syntax
    CHECK(run_cli("eval \"C(0,2)\"").exit_code == 3);                 // zero period
    CHECK(run_cli("solve-simple --p 0 --n 1 --q 1").exit_code == 3);  // zero parameter
    CHECK(run_cli("solve \"(0) * X1 = C(2,1)\"").exit_code == 3);     // empty coefficient
    CHECK(run_cli("verify \"(C(2,1)) * X1 = C(2,2)\" --assign \"X2=0\"").exit_code == 3);
    CHECK(run_cli("--format yaml eval \"0\"").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("root budget can be limited by flag and environment") {
    const std::string big = "\"C(1,20) + C(2,20) + C(3,20)\"";
    CHECK(run_cli("--root-budget 2 root --power 2 " + big).exit_code == 3);
    CHECK(run_cli("root --power 2 " + big).exit_code != 3);  // default is ample
    CHECK(run_cli("root --power 2 " + big, "DDSX_ROOT_BUDGET=2").exit_code == 3);
    // The flag wins over the environment.
    CHECK(run_cli("--root-budget 1000000 root --power 2 " + big, "DDSX_ROOT_BUDGET=2")
              .exit_code != 3);
    CHECK(run_cli("root --power 2 " + big, "DDSX_ROOT_BUDGET=junk").exit_code == 3);
}

TEST_CASE("identical invocations give byte-identical output") {
    const std::string equation = "\"(C(2,1) + C(4,1)) * X1 + (C(3,1)) * X2 = "
                                 "C(4,6) + C(12,2) + C(3,1)\"";
    const CliResult a = run_cli("solve --parallel 3 " + equation);
    const CliResult b = run_cli("solve --parallel 3 " + equation);
    const CliResult sequential = run_cli("solve " + equation);
    CHECK(a.exit_code == 0);
    CHECK(a.output == "X1 = C(4,1); X2 = C(1,1) + C(4,2)\n");
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
    CHECK(a.output == sequential.output);
}

TEST_CASE("--out writes the output to a file") {
    const std::string path = "/tmp/ddsx_test_out.txt";
    std::remove(path.c_str());
    const CliResult r = run_cli("--out " + path + " eval \"C(2,1) * C(2,1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.output.empty());
    std::ifstream file(path);
    std::string content((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
    CHECK(content == "C(2,2)\n");
    std::remove(path.c_str());
}

TEST_CASE("bench subcommands emit schema-stable CSV") {
    const CliResult nodes = run_cli("bench nodes --n-max 3 --q-max 3");
    CHECK(nodes.exit_code == 0);
    CHECK(nodes.output.find("p,n,q,node_count,colored_tree_ms,brute_force_ms,solution_count\n") == 0);
    CHECK(nodes.output.find("1,1,1,1,,,1\n") != std::string::npos);

    const CliResult timing = run_cli("bench time --max 3");
    CHECK(timing.exit_code == 0);
    CHECK(timing.output.find("p,n,q,node_count") == 0);
}
