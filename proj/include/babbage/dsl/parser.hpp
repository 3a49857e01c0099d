/**
 * @file parser.hpp
 * @brief Recursive-descent parser for map definitions.
 *
 *   def      := "f" "(" var ("," var)* ")" "=" expr
 *   expr     := term (("+" | "-") term)*
 *   term     := factor ("*" factor)*
 *   factor   := rational | "zeta" "(" int ")" ["^" int] | var | "(" expr ")" | "-" factor
 *   var      := "x" int
 *   rational := int ["/" int]
 *
 * Whitespace is insignificant and multiplication is always explicit. The
 * parameter list must read x1, x2, ..., xk in that order.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "babbage/dsl/ast.hpp"

namespace babbage::dsl {

struct MapDefinition {
    std::size_t arity = 0;
    ExprPtr body;
    /// lcm of the zeta orders in the body; 1 means the map is over Q.
    std::size_t field_order = 1;
};

/// Throws ParseError (with line and column) on any syntax or semantic error.
MapDefinition parse_map_def(std::string_view text);

/// A bare expression; variables must lie in 1..arity (arity 0 forbids them).
ExprPtr parse_expression(std::string_view text, std::size_t arity = 0);

/// Comma-separated constant expressions, as used for seeds on the command line.
std::vector<ExprPtr> parse_scalar_list(std::string_view text);

/// "f(x1, x2) = <body>"
std::string render(const MapDefinition& def);

}  // namespace babbage::dsl
