#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>

#include "babbage/exact/rational.hpp"

namespace babbage::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Variable {
    std::size_t index;  ///< 1-based, x1 is index 1
};

struct Literal {
    Rational value;  ///< non-negative; a leading '-' parses as Negate
};

/// zeta(order)^power
struct RootOfUnity {
    std::size_t order;
    std::size_t power;
};

struct Negate {
    ExprPtr operand;
};

enum class BinaryOp { add, subtract, multiply };

struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

/// Explicit parentheses, kept so rendering reproduces the parsed tree.
struct Group {
    ExprPtr inner;
};

struct Expr {
    std::variant<Variable, Literal, RootOfUnity, Negate, Binary, Group> node;
    SourcePos pos;
};

/// Structural equality; source positions are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

/// Text that parses back to a structurally equal tree.
std::string render(const Expr& e);

/// Largest variable index used, 0 if none.
std::size_t max_variable(const Expr& e);

/// lcm of every zeta order in the tree, 1 if none.
std::size_t field_order(const Expr& e);

}  // namespace babbage::dsl
