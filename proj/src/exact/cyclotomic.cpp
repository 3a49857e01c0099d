#include "babbage/exact/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

#include "babbage/errors.hpp"

namespace babbage {

namespace {

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

// Exact division of a by a monic integer polynomial.
IntPoly divide_exact_monic(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const Integer c = a[i];
        q[i - db] = c;
        if (c != 0) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[i - db + j] -= c * b[j];
            }
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (a[i] != 0) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
    }
    return q;
}

IntPoly compute_phi(std::size_t n, std::map<std::size_t, IntPoly>& memo) {
    if (auto it = memo.find(n); it != memo.end()) {
        return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divide_exact_monic(std::move(p), compute_phi(d, memo));
        }
    }
    memo.emplace(n, p);
    return p;
}

struct Modulus {
    IntPoly integer;
    RatPoly rational;
};

const Modulus& modulus(std::size_t n) {
    static const std::vector<Modulus> table = [] {
        std::map<std::size_t, IntPoly> memo;
        std::vector<Modulus> t(kMaxCyclotomicOrder + 1);
        for (std::size_t i = 1; i <= kMaxCyclotomicOrder; ++i) {
            t[i].integer = compute_phi(i, memo);
            for (const auto& c : t[i].integer) {
                t[i].rational.emplace_back(c);
            }
        }
        return t;
    }();
    if (n == 0 || n > kMaxCyclotomicOrder) {
        throw ContractError("cyclotomic order " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxCyclotomicOrder));
    }
    return table[n];
}

// Remainder of p modulo a monic polynomial m; result has exactly deg(m) coefficients.
RatPoly reduce(RatPoly p, const RatPoly& m) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = p.size(); i-- > dm;) {
        if (p[i].is_zero()) {
            continue;
        }
        const Rational c = p[i];
        for (std::size_t j = 0; j <= dm; ++j) {
            p[i - dm + j] -= c * m[j];
        }
    }
    p.resize(dm);
    return p;
}

RatPoly multiply(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    RatPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

RatPoly subtract(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) {
        a.resize(b.size());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] -= b[i];
    }
    trim(a);
    return a;
}

// Polynomial long division over Q: returns (quotient, remainder).
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) {
        return {{}, a};
    }
    RatPoly q(a.size() - db);
    const Rational lead = b.back();
    for (std::size_t i = a.size(); i-- > db;) {
        const Rational c = a[i] / lead;
        q[i - db] = c;
        if (!c.is_zero()) {
            for (std::size_t j = 0; j <= db; ++j) {
                a[i - db + j] -= c * b[j];
            }
        }
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

std::string render_coefficient_term(const Rational& c, std::size_t degree) {
    // c is non-zero and positive here; the sign is handled by the caller.
    std::string power = degree == 1 ? "z" : "z^" + std::to_string(degree);
    if (degree == 0) {
        return c.to_string();
    }
    if (c == Rational(1)) {
        return power;
    }
    return c.to_string() + "*" + power;
}

class RenderingParser {
public:
    RenderingParser(std::string_view text, std::size_t order) : text_(text), order_(order) {}

    CyclotomicNumber parse() {
        RatPoly acc;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        parse_term(acc, negative);
        while (true) {
            skip_ws();
            if (pos_ == text_.size()) {
                break;
            }
            const char op = peek();
            if (op != '+' && op != '-') {
                fail("expected '+' or '-'");
            }
            ++pos_;
            parse_term(acc, op == '-');
        }
        return CyclotomicNumber::from_polynomial(order_, std::move(acc));
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

    std::string digits() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void parse_term(RatPoly& acc, bool negative) {
        skip_ws();
        Rational coeff(1);
        std::size_t degree = 0;
        if (peek() == 'z') {
            ++pos_;
            degree = parse_power();
        } else {
            Integer num(digits());
            Integer den(1);
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                den = Integer(digits());
                if (den == 0) {
                    fail("zero denominator");
                }
            }
            coeff = Rational(num, den);
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 'z') {
                    fail("expected 'z'");
                }
                ++pos_;
                degree = parse_power();
            }
        }
        if (acc.size() <= degree) {
            acc.resize(degree + 1);
        }
        acc[degree] += negative ? -coeff : coeff;
    }

    std::size_t parse_power() {
        skip_ws();
        if (peek() != '^') {
            return 1;
        }
        ++pos_;
        skip_ws();
        const std::string d = digits();
        if (d.size() > 6) {
            fail("exponent too large");
        }
        return static_cast<std::size_t>(std::stoul(d));
    }

    std::string_view text_;
    std::size_t order_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string CycloPolynomial::to_string(char var) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coefficients.size(); i-- > 0;) {
        const Integer& c = coefficients[i];
        if (c == 0) {
            continue;
        }
        const Integer mag = c < 0 ? Integer(-c) : c;
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) {
            os << mag.get_str() << "*";
        }
        os << var;
        if (i > 1) {
            os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

CycloPolynomial cyclotomic_polynomial(std::size_t n, std::size_t bound) {
    if (n == 0 || n > bound) {
        throw ContractError("cyclotomic order " + std::to_string(n) + " outside 1.." + std::to_string(bound));
    }
    if (n <= kMaxCyclotomicOrder) {
        return {n, modulus(n).integer};
    }
    std::map<std::size_t, IntPoly> memo;
    return {n, compute_phi(n, memo)};
}

std::size_t cyclotomic_degree(std::size_t n) { return modulus(n).integer.size() - 1; }

CyclotomicNumber::CyclotomicNumber(std::size_t order, const Rational& value)
    : order_(order), coeffs_(cyclotomic_degree(order)) {
    coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::from_polynomial(std::size_t order, std::vector<Rational> coefficients) {
    CyclotomicNumber out(order);
    out.coeffs_ = reduce(std::move(coefficients), modulus(order).rational);
    out.coeffs_.resize(cyclotomic_degree(order));
    return out;
}

CyclotomicNumber CyclotomicNumber::zeta(std::size_t order, long exponent) {
    const long n = static_cast<long>(order);
    modulus(order);  // validates the order
    const long e = ((exponent % n) + n) % n;
    std::vector<Rational> p(static_cast<std::size_t>(e) + 1);
    p.back() = Rational(1);
    return from_polynomial(order, std::move(p));
}

CyclotomicNumber CyclotomicNumber::parse(std::string_view text, std::size_t order) {
    modulus(order);
    return RenderingParser(text, order).parse();
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Rational CyclotomicNumber::as_rational() const {
    if (!is_rational()) {
        throw ContractError("cyclotomic value " + to_string() + " is not rational");
    }
    return coeffs_[0];
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& o) const {
    if (order_ != o.order_) {
        throw ContractError("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                            std::to_string(o.order_));
    }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    require_same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
    }
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    require_same_order(o);
    coeffs_ = reduce(multiply(coeffs_, o.coeffs_), modulus(order_).rational);
    coeffs_.resize(cyclotomic_degree(order_));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& o) {
    require_same_order(o);
    return *this *= o.inverse();
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) {
        throw ArithmeticError("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    // Extended Euclid on (Phi_n, a): track s with s * a == r (mod Phi_n).
    const RatPoly& phi = modulus(order_).rational;
    RatPoly r0 = phi;
    RatPoly r1 = coeffs_;
    trim(r1);
    RatPoly s0;
    RatPoly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = subtract(s0, multiply(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_n is irreducible, so the gcd r0 is a non-zero constant.
    const Rational g = r0.front();
    for (auto& c : s0) {
        c /= g;
    }
    return from_polynomial(order_, std::move(s0));
}

CyclotomicNumber CyclotomicNumber::pow(long exponent) const {
    CyclotomicNumber base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    CyclotomicNumber acc = one(order_);
    while (e > 0) {
        if (e & 1UL) {
            acc *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return acc;
}

CyclotomicNumber CyclotomicNumber::embed(std::size_t target_order) const {
    modulus(target_order);
    if (target_order % order_ != 0) {
        throw ContractError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                            std::to_string(target_order) + ")");
    }
    const std::size_t scale = target_order / order_;
    RatPoly p((coeffs_.size() - 1) * scale + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[i * scale] = coeffs_[i];
    }
    return from_polynomial(target_order, std::move(p));
}

std::string CyclotomicNumber::to_string() const {
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += render_coefficient_term(abs(c), i);
    }
    return first ? "0" : out;
}

}  // namespace babbage
