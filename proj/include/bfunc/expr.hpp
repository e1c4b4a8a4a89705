#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfunc/diffop.hpp"

namespace bfunc {

// Grammar (whitespace-insensitive, explicit '*' only):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' natural)?
//   primary := integer | identifier | '(' expr ')'
//
// Identifiers are session variables, `d<var>` for the derivation in <var>,
// or the parameter `s`. Division is allowed by nonzero constants only, so
// `3/4` is a rational literal.

// Validates a variable list: identifiers, distinct, not `s`, and no name may
// be `d` followed by another name in the list.
void validate_variables(std::span<const std::string> vars);

// Variables mentioned in `sources`, sorted; `d<name>` contributes <name>.
std::vector<std::string> infer_variables(std::span<const std::string> sources);

// Commutative lowering: d<var> becomes the symbol variable xi.
SymbolPoly parse_poly(std::string_view src, std::span<const std::string> vars);
// Operator lowering: products are composed with the Leibniz rule, so
// "dx*x" is x*dx + 1.
DiffOp parse_op(std::string_view src, std::span<const std::string> vars);

// Terms in descending order of <; coefficients in lowest terms. The output
// parses back to an equal value.
std::string format_poly(const SymbolPoly& f, std::span<const std::string> vars,
                        TieOrder tie = TieOrder::Grevlex);
std::string format_op(const DiffOp& p, std::span<const std::string> vars,
                      TieOrder tie = TieOrder::Grevlex);

// Univariate polynomial in s given by ascending coefficients.
std::string format_univariate(std::span<const Rational> ascending, std::string_view var = "s");

}  // namespace bfunc
