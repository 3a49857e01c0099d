#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "babbage/core/engine.hpp"
#include "babbage/exact/rational.hpp"
#include "generators.hpp"

using namespace babbage;

namespace {

IterableMap<Rational> fibonacci_map() {
    return IterableMap<Rational>(2, [](std::span<const Rational> x) { return x[0] + x[1]; });
}

// Next k terms of the recurrence, written out directly.
template <class E>
std::vector<E> next_block(const IterableMap<E>& f, const std::vector<E>& window) {
    const std::size_t k = window.size();
    std::vector<E> seq = window;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<E> args(seq.end() - static_cast<std::ptrdiff_t>(k), seq.end());
        seq.push_back(f(std::span<const E>(args)));
    }
    return std::vector<E>(seq.begin() + static_cast<std::ptrdiff_t>(k), seq.end());
}

IterableMap<long> mod_map(std::size_t k, long m, std::vector<long> weights, long shift) {
    return IterableMap<long>(k, [m, weights = std::move(weights), shift](std::span<const long> x) {
        long acc = shift;
        for (std::size_t i = 0; i < x.size(); ++i) {
            acc += weights[i] * x[i];
        }
        return ((acc % m) + m) % m;
    });
}

}  // namespace

TEST_CASE("state and map contracts") {
    CHECK_THROWS_AS(State<int>(std::vector<int>{}), ContractError);
    CHECK_THROWS_AS(IterableMap<int>(0, [](std::span<const int>) { return 0; }), ContractError);
    const auto f = fibonacci_map();
    const std::vector<Rational> three{1, 2, 3};
    CHECK_THROWS_AS(f(std::span<const Rational>(three)), ContractError);
    CHECK_THROWS_AS(first_iterate(f, State<Rational>{1, 2, 3}), ContractError);
    CHECK_THROWS_AS(orbit(f, State<Rational>{1, 1}, 0), ContractError);
    CHECK_THROWS_AS(point_involutory_order(f, State<Rational>{1, 1}, 0), ContractError);
}

TEST_CASE("first iterate of the Fibonacci map") {
    const auto f = fibonacci_map();
    CHECK(first_iterate(f, State<Rational>{1, 1}) == State<Rational>{2, 3});
    CHECK(iterate(f, State<Rational>{1, 1}, 5) == State<Rational>{89, 144});
    CHECK(iterate(f, State<Rational>{3, 4}, 0) == State<Rational>{3, 4});
}

TEST_CASE("first iterate of the sum map with k=2, A=0") {
    const IterableMap<Rational> f(2, [](std::span<const Rational> x) { return -x[0] - x[1]; });
    CHECK(first_iterate(f, State<Rational>{1, 2}) == State<Rational>{-3, 1});
    CHECK(iterate(f, State<Rational>{1, 2}, 3) == State<Rational>{1, 2});
}

TEST_CASE("first iterate agrees with the recurrence written out") {
    auto rng = testgen::make_rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t k = testgen::uniform(rng, 1, 5);
        const long m = static_cast<long>(testgen::uniform(rng, 2, 7));
        std::vector<long> weights;
        std::vector<long> seed;
        for (std::size_t i = 0; i < k; ++i) {
            weights.push_back(static_cast<long>(testgen::uniform(rng, 0, 6)));
            seed.push_back(static_cast<long>(testgen::uniform(rng, 0, static_cast<std::size_t>(m - 1))));
        }
        const auto f = mod_map(k, m, weights, static_cast<long>(testgen::uniform(rng, 0, 5)));
        CHECK(first_iterate(f, State<long>(seed)).vector() == next_block(f, seed));
    }
}

TEST_CASE("iterate addition and multiplication rules") {
    auto rng = testgen::make_rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = testgen::uniform(rng, 1, 4);
        std::vector<long> weights;
        std::vector<long> seed;
        for (std::size_t i = 0; i < k; ++i) {
            weights.push_back(static_cast<long>(testgen::uniform(rng, 0, 4)));
            seed.push_back(static_cast<long>(testgen::uniform(rng, 0, 4)));
        }
        const auto f = mod_map(k, 5, weights, 1);
        const State<long> s(seed);
        const std::size_t a = testgen::uniform(rng, 0, 6);
        const std::size_t b = testgen::uniform(rng, 0, 6);
        CHECK(iterate(f, s, a + b) == iterate(f, iterate(f, s, b), a));
        State<long> nested = s;
        for (std::size_t i = 0; i < b; ++i) {
            nested = iterate(f, nested, a);
        }
        CHECK(iterate(f, s, a * b) == nested);
    }
}

TEST_CASE("orbit and point order") {
    const auto f = mod_map(2, 3, {1, 1}, 0);
    const auto o = orbit(f, State<long>{0, 1}, 100);
    CHECK(o.recurred);
    REQUIRE(o.states.size() == 4);
    CHECK(o.states[1] == State<long>{1, 2});
    CHECK(o.states[2] == State<long>{0, 2});
    CHECK(o.states[3] == State<long>{2, 1});
    CHECK(point_involutory_order(f, State<long>{0, 1}, 100) == std::optional<std::size_t>(4));
    CHECK(point_involutory_order(f, State<long>{0, 0}, 100) == std::optional<std::size_t>(1));

    const auto truncated = orbit(f, State<long>{0, 1}, 2);
    CHECK_FALSE(truncated.recurred);
    CHECK(truncated.states.size() == 2);

    const auto fib = fibonacci_map();
    CHECK_FALSE(point_involutory_order(fib, State<Rational>{1, 1}, 50).has_value());
    CHECK(point_involutory_order(fib, State<Rational>{0, 0}, 50) == std::optional<std::size_t>(1));
}

TEST_CASE("induced self-maps") {
    const auto f = mod_map(3, 3, {1, 1, 1}, 0);
    const auto g = induced_self_map(f, InducedContext<long>{1, {0, 2}});
    CHECK(g(0) == 2);
    CHECK(g(2) == 1);
    CHECK(g(1) == 0);
    CHECK(iterate_self_map(g, 1L, 3) == 1);
    CHECK_THROWS_AS(induced_self_map(f, InducedContext<long>{0, {0, 2}}), ContractError);
    CHECK_THROWS_AS(induced_self_map(f, InducedContext<long>{4, {0, 2}}), ContractError);
    CHECK_THROWS_AS(induced_self_map(f, InducedContext<long>{1, {0}}), ContractError);

    const auto middle = induced_self_map(f, InducedContext<long>{2, {1, 1}});
    CHECK(middle(0) == 2);
}

TEST_CASE("floating point maps with a tolerance predicate") {
    const IterableMap<double> f(1, [](std::span<const double> x) { return 1.0 / x[0]; });
    const auto near = [](double a, double b) { return std::abs(a - b) < 1e-12; };
    CHECK(point_involutory_order(f, State<double>{3.0}, 10, near) == std::optional<std::size_t>(2));
    CHECK(states_equal(iterate(f, State<double>{0.3}, 2), State<double>{0.3}, near));
}
