/**
 * @file closed_forms.hpp
 * @brief Closed-form iterates of the standard example maps, used as oracles
 *        against the engine and the matrix fast path.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "babbage/affine/affine.hpp"
#include "babbage/core/engine.hpp"
#include "babbage/exact/cyclotomic.hpp"
#include "babbage/exact/rational.hpp"

namespace babbage {

/// f(x_1, x_2) = x_1 + x_2:
///   f^n(x) = (F_{2n-1} x_1 + F_{2n} x_2, F_{2n} x_1 + F_{2n+1} x_2), with F_{-1} = 1 at n = 0.
State<Rational> fibonacci_closed_form(std::size_t n, const State<Rational>& s);

/// (x_{k-p+2}, ..., x_k, value, x_1, ..., x_{k-p}) for 1 <= p <= k; s itself for p = 0.
/// This is the shape of the p-th iterate of every map whose first iterate is
/// (f(x), x_1, ..., x_{k-1}) with period k+1.
template <class E>
State<E> rotate_in(const State<E>& s, const E& value, std::size_t p) {
    const std::size_t k = s.arity();
    if (p > k) {
        throw ContractError("rotate_in needs p <= k");
    }
    if (p == 0) {
        return s;
    }
    std::vector<E> out;
    out.reserve(k);
    for (std::size_t i = k - p + 1; i < k; ++i) {
        out.push_back(s[i]);
    }
    out.push_back(value);
    for (std::size_t i = 0; i + p < k; ++i) {
        out.push_back(s[i]);
    }
    return State<E>(std::move(out));
}

/// f(x) = A - sum x_j iterated `iterate_index` times, via the period-(k+1) case formulas.
template <class S>
State<S> sum_map_closed_form(std::size_t k, const S& constant, std::size_t iterate_index, const State<S>& s) {
    if (s.arity() != k) {
        throw ContractError("sum_map_closed_form: state arity differs from k");
    }
    S value = constant;
    for (const auto& x : s) {
        value -= x;
    }
    return rotate_in(s, value, iterate_index % (k + 1));
}

/// Iterates of f(x_1, ..., x_k) = g(x_j). Closed form for j = 1 and j = k, engine otherwise.
template <class E>
State<E> projection_family_iterate(const std::function<E(const E&)>& g, std::size_t j, std::size_t k,
                                   std::size_t n, const State<E>& s) {
    if (s.arity() != k || j < 1 || j > k) {
        throw ContractError("projection_family_iterate: need state arity k and 1 <= j <= k");
    }
    if (n == 0) {
        return s;
    }
    std::vector<E> out;
    out.reserve(k);
    if (j == 1) {
        for (const auto& x : s) {
            out.push_back(iterate_self_map(g, x, n));
        }
        return State<E>(std::move(out));
    }
    if (j == k) {
        // (g^{nk-k+1}(x_k), ..., g^{nk}(x_k))
        E cur = iterate_self_map(g, s[k - 1], n * k - k + 1);
        out.push_back(cur);
        for (std::size_t i = 1; i < k; ++i) {
            cur = g(cur);
            out.push_back(cur);
        }
        return State<E>(std::move(out));
    }
    const IterableMap<E> f(k, [g, j](std::span<const E> x) { return g(x[j - 1]); });
    return iterate(f, s, n);
}

enum class RootsVariant {
    induced_first,   ///< f_1^c(x_1 | x_2) = a^c x_1 + b (1 - a^c)/(1 - a) x_2
    induced_second,  ///< f_2^c(x_2 | x_1) = b^c x_2 + a (1 - b^c)/(1 - b) x_1
    full,            ///< (F_{2c-1} a^c x_1 + F_{2c} a^{c+1} x_2, F_{2c} a^{c+2} x_1 + F_{2c+1} a^c x_2)
};

/// Coefficients a = zeta_n^a_exponent and b = zeta_n^b_exponent of f(x_1, x_2) = a x_1 + b x_2.
struct RootsMap {
    std::size_t order = 3;
    long a_exponent = 1;
    long b_exponent = 2;

    CyclotomicNumber a() const { return CyclotomicNumber::zeta(order, a_exponent); }
    CyclotomicNumber b() const { return CyclotomicNumber::zeta(order, b_exponent); }
    AffineMapSpec<CyclotomicNumber> spec() const {
        return {{a(), b()}, CyclotomicNumber::zero(order)};
    }
};

/// Evaluates the closed form selected by `variant` at iterate count c = iterate_count.
/// Induced variants return a 1-tuple and, when c is a multiple of the root order,
/// throw std::logic_error if the value differs from the free argument.
/// Throws ContractError when a or b equals 1 or a == b.
State<CyclotomicNumber> linear_roots_checks(const RootsMap& map, RootsVariant variant, std::size_t iterate_count,
                                            const State<CyclotomicNumber>& s);

}  // namespace babbage
