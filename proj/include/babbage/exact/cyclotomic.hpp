/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_n) as residues modulo the n-th cyclotomic polynomial.
 *
 * A CyclotomicNumber of order n stores deg(Phi_n) rational coefficients
 * c_0 + c_1 z + ... with z = zeta_n. Order 1 is Q itself (Phi_1 = x - 1).
 * Values of different orders never mix; embed() moves a value into a
 * larger field explicitly.
 */
#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "babbage/exact/rational.hpp"

namespace babbage {

inline constexpr std::size_t kMaxCyclotomicOrder = 64;

/// Monic integer polynomial Phi_n, coefficients from degree 0 upwards.
struct CycloPolynomial {
    std::size_t order = 0;
    std::vector<Integer> coefficients;

    std::size_t degree() const { return coefficients.size() - 1; }
    std::string to_string(char var = 'x') const;
};

/// Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d. Throws ContractError if n is 0 or above `bound`.
CycloPolynomial cyclotomic_polynomial(std::size_t n, std::size_t bound = kMaxCyclotomicOrder);

/// Euler phi via the degree of Phi_n.
std::size_t cyclotomic_degree(std::size_t n);

class CyclotomicNumber {
public:
    /// The rational `value` embedded in Q(zeta_order).
    explicit CyclotomicNumber(std::size_t order = 1, const Rational& value = Rational{});

    static CyclotomicNumber zero(std::size_t order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(std::size_t order) { return CyclotomicNumber(order, Rational(1)); }
    /// zeta_order^exponent; negative exponents allowed.
    static CyclotomicNumber zeta(std::size_t order, long exponent = 1);
    /// Reduces an arbitrary-length coefficient list modulo Phi_order.
    static CyclotomicNumber from_polynomial(std::size_t order, std::vector<Rational> coefficients);

    /// Parses the rendering produced by to_string(), e.g. "-1/2*z + 3".
    static CyclotomicNumber parse(std::string_view text, std::size_t order);

    std::size_t order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws ContractError unless is_rational().
    Rational as_rational() const;

    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator/=(const CyclotomicNumber& o);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
    CyclotomicNumber operator-() const;

    /// Multiplicative inverse via extended gcd with Phi_n. Throws ArithmeticError on zero.
    CyclotomicNumber inverse() const;
    CyclotomicNumber pow(long exponent) const;

    /// Image under zeta_order -> zeta_target^(target/order). target must be a multiple of order.
    CyclotomicNumber embed(std::size_t target_order) const;

    /// Equal orders and coefficients. Values of different orders compare unequal.
    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    /// Polynomial in "z", highest degree first: "z^2 - 3/4*z + 1", "0".
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& c) {
        return os << c.to_string();
    }

private:
    void require_same_order(const CyclotomicNumber& o) const;

    std::size_t order_;
    std::vector<Rational> coeffs_;
};

}  // namespace babbage
