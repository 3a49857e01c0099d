/**
 * @file compile.hpp
 * @brief Turning parsed expressions into engine maps, affine specs and scalars.
 *
 * Everything is evaluated in Q(zeta_N) for a caller-chosen N that must be a
 * multiple of the field order of every expression involved. N = 1 is Q.
 */
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "babbage/affine/affine.hpp"
#include "babbage/core/engine.hpp"
#include "babbage/dsl/parser.hpp"
#include "babbage/exact/cyclotomic.hpp"

namespace babbage::dsl {

using Scalar = CyclotomicNumber;

/// Throws ContractError if `order` is not a multiple of field_order(e) or a variable is out of range.
Scalar evaluate(const Expr& e, std::span<const Scalar> vars, std::size_t order);

IterableMap<Scalar> to_iterable_map(const MapDefinition& def, std::size_t order);

/// Coefficients and constant after folding. Throws ContractError when a product of
/// two non-constant factors survives, i.e. the body is not affine.
AffineMapSpec<Scalar> to_affine(const MapDefinition& def, std::size_t order);

bool is_affine(const MapDefinition& def);

/// Comma-separated constants plus the lcm of their zeta orders.
struct ParsedScalars {
    std::vector<ExprPtr> exprs;
    std::size_t field_order = 1;
};

ParsedScalars parse_scalars(std::string_view text);

std::vector<Scalar> evaluate_scalars(const ParsedScalars& p, std::size_t order);

/// lcm(a, b), with ContractError above the supported cyclotomic order.
std::size_t combine_orders(std::size_t a, std::size_t b);

/// Scalar in the input syntax, e.g. "-3/4" or "2*zeta(3) - 1".
/// Reparses (with parse_scalars) to an equal value.
std::string to_source(const Scalar& c);

/// Affine spec rendered as a definition with zero terms dropped, e.g. "f(x1, x2) = x1 - 1/2*x2 + 3".
std::string to_source(const AffineMapSpec<Scalar>& spec);

}  // namespace babbage::dsl
