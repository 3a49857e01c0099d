#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numbers>
#include <numeric>

#include "babbage/errors.hpp"
#include "babbage/exact/cyclotomic.hpp"
#include "babbage/exact/fibonacci.hpp"
#include "babbage/exact/rational.hpp"
#include "generators.hpp"

using namespace babbage;

namespace {

std::size_t totient(std::size_t n) {
    std::size_t count = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        count += std::gcd(i, n) == 1 ? 1 : 0;
    }
    return count;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<long> as_longs(const CycloPolynomial& p) {
    std::vector<long> out;
    for (const auto& c : p.coefficients) {
        out.push_back(c.get_si());
    }
    return out;
}

std::complex<double> numeric(const CyclotomicNumber& c) {
    const double angle = 2.0 * std::numbers::pi / static_cast<double>(c.order());
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < c.coefficients().size(); ++i) {
        acc += c.coefficients()[i].to_double() * std::polar(1.0, angle * static_cast<double>(i));
    }
    return acc;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-7 * (1.0 + std::abs(a)); }

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(Integer(6), Integer(-4)).to_string() == "-3/2");
    CHECK(Rational(Integer(0), Integer(-7)) == Rational(0));
    CHECK(Rational::parse("-12/8") == Rational(Integer(-3), Integer(2)));
    CHECK(Rational::parse("5").is_integer());
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ArithmeticError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("1/"), ContractError);
    CHECK_THROWS_AS(Rational::parse("x"), ContractError);
    CHECK_THROWS_AS(Rational::parse(""), ContractError);
    CHECK(Rational(Integer(1), Integer(3)) < Rational(Integer(1), Integer(2)));
    CHECK(abs(Rational(-4)) == Rational(4));
}

TEST_CASE("rational field laws on random values") {
    auto rng = testgen::make_rng(10);
    for (int i = 0; i < 300; ++i) {
        const Rational a = testgen::rational(rng);
        const Rational b = testgen::rational(rng);
        const Rational c = testgen::rational(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        CHECK(std::hash<Rational>{}(a) == std::hash<Rational>{}(Rational::parse(a.to_string())));
    }
}

TEST_CASE("Fibonacci numbers") {
    CHECK(fibonacci(0) == 0);
    CHECK(fibonacci(1) == 1);
    CHECK(fibonacci(30) == 832040);
    CHECK(fibonacci(100) == Integer("354224848179261915075"));
    CHECK(fibonacci_signed(-1) == 1);
    CHECK(fibonacci_signed(-2) == -1);
    CHECK(fibonacci_signed(-7) == 13);
    for (long n = -20; n <= 20; ++n) {
        CHECK(fibonacci_signed(n + 2) == fibonacci_signed(n + 1) + fibonacci_signed(n));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(as_longs(cyclotomic_polynomial(1)) == std::vector<long>{-1, 1});
    CHECK(as_longs(cyclotomic_polynomial(3)) == std::vector<long>{1, 1, 1});
    CHECK(as_longs(cyclotomic_polynomial(4)) == std::vector<long>{1, 0, 1});
    CHECK(as_longs(cyclotomic_polynomial(6)) == std::vector<long>{1, -1, 1});
    CHECK(as_longs(cyclotomic_polynomial(12)) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(3).to_string() == "x^2 + x + 1");
    CHECK_THROWS_AS(cyclotomic_polynomial(0), ContractError);
    CHECK_THROWS_AS(cyclotomic_polynomial(65), ContractError);

    for (std::size_t n = 1; n <= kMaxCyclotomicOrder; ++n) {
        CHECK(cyclotomic_degree(n) == totient(n));
        std::vector<Integer> product{Integer(1)};
        for (std::size_t d = 1; d <= n; ++d) {
            if (n % d == 0) {
                product = poly_mul(product, cyclotomic_polynomial(d).coefficients);
            }
        }
        std::vector<Integer> expected(n + 1, Integer(0));
        expected[0] = -1;
        expected[n] = 1;
        CHECK(product == expected);
    }
}

TEST_CASE("roots of unity") {
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto z = CyclotomicNumber::zeta(n);
        CHECK(z.pow(static_cast<long>(n)) == CyclotomicNumber::one(n));
        CHECK(z.pow(-1) * z == CyclotomicNumber::one(n));
        CHECK(close(numeric(z), std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(n))));
    }
    const auto w = CyclotomicNumber::zeta(3);
    CHECK(w * w + w + CyclotomicNumber::one(3) == CyclotomicNumber::zero(3));
    CHECK(w.to_string() == "z");
    CHECK((w * w).to_string() == "-z - 1");
    CHECK(CyclotomicNumber::zero(5).to_string() == "0");
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
    auto rng = testgen::make_rng(11);
    for (std::size_t order : {1UL, 3UL, 4UL, 5UL, 8UL, 12UL, 15UL}) {
        for (int i = 0; i < 40; ++i) {
            const auto a = testgen::cyclotomic(rng, order);
            const auto b = testgen::cyclotomic(rng, order);
            CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
            CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
            CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
            if (!b.is_zero()) {
                CHECK(close(numeric(a / b), numeric(a) / numeric(b)));
                CHECK(b * b.inverse() == CyclotomicNumber::one(order));
            }
            CHECK(CyclotomicNumber::parse(a.to_string(), order) == a);
            CHECK(close(numeric(a.embed(order * 2)), numeric(a)));
        }
    }
}

TEST_CASE("cyclotomic contracts") {
    CHECK_THROWS_AS(CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(4), ContractError);
    CHECK_THROWS_AS(CyclotomicNumber::zero(3).inverse(), ArithmeticError);
    CHECK_THROWS_AS(CyclotomicNumber::zeta(3).as_rational(), ContractError);
    CHECK_THROWS_AS(CyclotomicNumber::zeta(3).embed(4), ContractError);
    CHECK(CyclotomicNumber(3, Rational(7)).as_rational() == Rational(7));
    CHECK(CyclotomicNumber::zeta(3) != CyclotomicNumber::zeta(6));
    CHECK(CyclotomicNumber::zeta(3).embed(6) == CyclotomicNumber::zeta(6, 2));
}
