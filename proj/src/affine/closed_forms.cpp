#include "babbage/affine/closed_forms.hpp"

#include <stdexcept>

#include "babbage/errors.hpp"
#include "babbage/exact/fibonacci.hpp"

namespace babbage {

State<Rational> fibonacci_closed_form(std::size_t n, const State<Rational>& s) {
    if (s.arity() != 2) {
        throw ContractError("fibonacci_closed_form needs a 2-tuple");
    }
    const long two_n = 2 * static_cast<long>(n);
    const Rational lo(fibonacci_signed(two_n - 1));
    const Rational mid(fibonacci_signed(two_n));
    const Rational hi(fibonacci_signed(two_n + 1));
    return State<Rational>{lo * s[0] + mid * s[1], mid * s[0] + hi * s[1]};
}

State<CyclotomicNumber> linear_roots_checks(const RootsMap& map, RootsVariant variant, std::size_t iterate_count,
                                            const State<CyclotomicNumber>& s) {
    if (s.arity() != 2) {
        throw ContractError("linear_roots_checks needs a 2-tuple");
    }
    const CyclotomicNumber one = CyclotomicNumber::one(map.order);
    const CyclotomicNumber a = map.a();
    const CyclotomicNumber b = map.b();
    if (a == one || b == one) {
        throw ContractError("linear_roots_checks: a and b must differ from 1");
    }
    if (a == b) {
        throw ContractError("linear_roots_checks: a and b must be distinct");
    }
    for (const auto& x : s) {
        if (x.order() != map.order) {
            throw ContractError("linear_roots_checks: state lives in a different cyclotomic field");
        }
    }
    const long c = static_cast<long>(iterate_count);
    const bool full_period = iterate_count % map.order == 0;

    switch (variant) {
        case RootsVariant::induced_first: {
            const CyclotomicNumber ac = a.pow(c);
            CyclotomicNumber value = ac * s[0] + b * ((one - ac) / (one - a)) * s[1];
            if (full_period && value != s[0]) {
                throw std::logic_error("induced first-argument iterate did not return its argument");
            }
            return State<CyclotomicNumber>{value};
        }
        case RootsVariant::induced_second: {
            const CyclotomicNumber bc = b.pow(c);
            CyclotomicNumber value = bc * s[1] + a * ((one - bc) / (one - b)) * s[0];
            if (full_period && value != s[1]) {
                throw std::logic_error("induced second-argument iterate did not return its argument");
            }
            return State<CyclotomicNumber>{value};
        }
        case RootsVariant::full: {
            const long two_c = 2 * c;
            const CyclotomicNumber f_lo(map.order, Rational(fibonacci_signed(two_c - 1)));
            const CyclotomicNumber f_mid(map.order, Rational(fibonacci_signed(two_c)));
            const CyclotomicNumber f_hi(map.order, Rational(fibonacci_signed(two_c + 1)));
            return State<CyclotomicNumber>{f_lo * a.pow(c) * s[0] + f_mid * a.pow(c + 1) * s[1],
                                           f_mid * a.pow(c + 2) * s[0] + f_hi * a.pow(c) * s[1]};
        }
    }
    throw std::logic_error("unknown roots variant");
}

}  // namespace babbage
