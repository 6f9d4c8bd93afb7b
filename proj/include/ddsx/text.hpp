#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ddsx/colored_tree.hpp"
#include "ddsx/cycle_set.hpp"
#include "ddsx/equation.hpp"

namespace ddsx {

// Text formats.
//
//   system   := "0" | cycle { "+" cycle }
//   cycle    := "C" "(" INT "," INT ")"
//   equation := lterm { "+" lterm } "=" system
//   lterm    := "(" system ")" "*" VAR [ "^" INT ]
//   VAR      := "X" INT
//
// Whitespace is insignificant. INT is a positive decimal integer; 0 is only
// the empty-system literal. C(p,n) denotes n components of period p.
//
// eval expressions extend `system` with products, scalar factors, powers and
// parentheses:
//
//   expr   := mul { "+" mul }
//   mul    := factor { "*" factor }
//   factor := base [ "^" INT ]          (here the exponent 0 is allowed)
//   base   := cycle | "0" | INT | "(" expr ")"
//
// A bare INT is a scalar: it can multiply a system (replication) or another
// scalar, but cannot be added to anything or stand as a result.

enum class OutputFormat { text, json, csv };

OutputFormat parse_output_format(std::string_view name);  // throws ddsx::error

CycleSet parse_system(std::string_view text);
Equation parse_equation(std::string_view text);
CycleSet parse_expression(std::string_view text);

// "X1=C(2,1);X2=0" -> base values per variable.
std::map<int, CycleSet> parse_assignment(std::string_view text);

// Canonical text: "0", "C(2,3)", "C(1,1) + C(2,4)".
std::string print_system(const CycleSet& s);
std::string print_equation(const Equation& eq);

std::string print_solution_set(const SolutionSet& s, OutputFormat format);
std::string print_assignments(const std::vector<Assignment>& assignments,
                              OutputFormat format);
std::string print_eval_result(const CycleSet& s, OutputFormat format);
std::string print_bounds(const SolveBounds& b, OutputFormat format);
std::string print_verify_result(bool ok, OutputFormat format);

// Node table in the layout
//   Node | Splits | Node solution | Subtree solutions set
// with one row per value, root first. Subtree sets require an aggregated tree.
std::string format_node_table(const ColoredTree& tree);

}  // namespace ddsx
