#include "babbage/exact/rational.hpp"

#include <cctype>

#include "babbage/errors.hpp"

namespace babbage {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw ArithmeticError("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ContractError("malformed rational literal '" + std::string(text) + "'");
    }
    const Rational r{Integer(std::string(num)), Integer(std::string(den))};
    return negative ? -r : r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw ArithmeticError("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace babbage

std::size_t std::hash<babbage::Rational>::operator()(const babbage::Rational& r) const noexcept {
    const std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}
