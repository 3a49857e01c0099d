#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "babbage/errors.hpp"
#include "babbage/exact/rational.hpp"
#include "babbage/recurrence/claim1.hpp"
#include "babbage/recurrence/recurrence.hpp"
#include "generators.hpp"

using namespace babbage;

namespace {

const FiniteTable kTable3(3, 2, {0, 1, 2, 1, 2, 0, 2, 0, 1});

IterableMap<Rational> sum_map(std::size_t k, const Rational& a) {
    return IterableMap<Rational>(k, [a](std::span<const Rational> x) {
        Rational acc = a;
        for (const auto& v : x) {
            acc -= v;
        }
        return acc;
    });
}

// Minimal period of a purely periodic sequence prefix, by direct comparison.
std::size_t naive_period(const std::vector<Symbol>& seq) {
    for (std::size_t j = 1; j < seq.size(); ++j) {
        bool ok = true;
        for (std::size_t i = 0; i + j < seq.size() && ok; ++i) {
            ok = seq[i] == seq[i + j];
        }
        if (ok) {
            return j;
        }
    }
    return seq.size();
}

}  // namespace

TEST_CASE("generate and consistency") {
    const RecurrenceSpec<Symbol> spec(kTable3.as_map(), State<Symbol>{0, 1});
    CHECK(generate(spec, 10) == std::vector<Symbol>{0, 1, 1, 2, 0, 2, 2, 1, 0, 1});
    CHECK_THROWS_AS(generate(spec, 1), ContractError);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(consistency_check(spec, n));
    }
    CHECK_THROWS_AS(RecurrenceSpec<Symbol>(kTable3.as_map(), State<Symbol>{0, 1, 2}), ContractError);

    auto rng = testgen::make_rng(40);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t k = testgen::uniform(rng, 1, 4);
        std::vector<Rational> seed;
        for (std::size_t i = 0; i < k; ++i) {
            seed.push_back(testgen::rational(rng));
        }
        const RecurrenceSpec<Rational> s(sum_map(k, testgen::rational(rng)), State<Rational>(seed));
        CHECK(consistency_check(s, testgen::uniform(rng, 0, 9)));
    }
}

TEST_CASE("period detection") {
    const RecurrenceSpec<Symbol> spec(kTable3.as_map(), State<Symbol>{0, 1});
    const CycleFinding c = detect_minimal_period(spec);
    REQUIRE(c.minimal_period.has_value());
    CHECK(*c.minimal_period == 8);
    CHECK(c.preperiod == 0);

    const RecurrenceSpec<Symbol> fixed(kTable3.as_map(), State<Symbol>{0, 0});
    CHECK(detect_minimal_period(fixed).minimal_period == std::optional<std::size_t>(1));

    // x_{n+1} = 0 after any start: preperiod 1, period 1.
    const FiniteTable zero(3, 1, {0, 0, 0});
    const CycleFinding z = detect_minimal_period(RecurrenceSpec<Symbol>(zero.as_map(), State<Symbol>{2}));
    CHECK(z.minimal_period == std::optional<std::size_t>(1));
    CHECK(z.preperiod == 1);

    const IterableMap<Rational> fib(2, [](std::span<const Rational> x) { return x[0] + x[1]; });
    CHECK_FALSE(detect_minimal_period(RecurrenceSpec<Rational>(fib, State<Rational>{1, 1}), 200)
                    .minimal_period.has_value());
    CHECK_THROWS_AS(detect_minimal_period(spec, 0), ContractError);

    auto rng = testgen::make_rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = testgen::uniform(rng, 2, 4);
        const std::size_t k = testgen::uniform(rng, 1, 3);
        const FiniteTable t = testgen::table(rng, m, k);
        const auto start = state_from_index(testgen::uniform(rng, 0, t.size() - 1), m, k);
        const RecurrenceSpec<Symbol> s(t.as_map(), State<Symbol>(start));
        const CycleFinding found = detect_minimal_period(s, 400);
        REQUIRE(found.minimal_period.has_value());
        const auto seq = generate(s, 400);
        const std::vector<Symbol> tail(seq.begin() + static_cast<std::ptrdiff_t>(found.preperiod), seq.end());
        CHECK(naive_period(tail) == *found.minimal_period);
    }
}

TEST_CASE("augmentation") {
    for (const Rational a : {Rational(0), Rational(5), Rational(Integer(-3), Integer(7))}) {
        const auto lifted = augment(sum_map(2, a), 3);
        CHECK(lifted.arity() == 3);
        auto rng = testgen::make_rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            const std::vector<Rational> x{testgen::rational(rng), testgen::rational(rng), testgen::rational(rng)};
            CHECK(lifted(std::span<const Rational>(x)) == x[0]);
        }
    }
    CHECK_THROWS_AS(augment(sum_map(2, 0), 2), ContractError);

    // The first projection lifts to the first projection when k divides the new arity.
    const IterableMap<Symbol> proj = hat_id(3, 2).as_map();
    const FiniteTable lifted4 = FiniteTable::from_function(3, 4, [&](std::span<const Symbol> x) {
        return augment(proj, 4)(x);
    });
    CHECK(lifted4 == hat_id(3, 4));
    const IterableMap<Symbol> proj1 = hat_id(3, 1).as_map();
    const FiniteTable lifted2 = FiniteTable::from_function(3, 2, [&](std::span<const Symbol> x) {
        return augment(proj1, 2)(x);
    });
    CHECK(lifted2 == hat_id(3, 2));
}

TEST_CASE("state period versus sequence period") {
    const Claim1Report r = claim1_report(kTable3);
    CHECK(r.k == 2);
    CHECK(r.entries.size() == 9);
    CHECK(r.all_period_relations());
    CHECK(r.all_j_divides_nk());
    const std::vector<Symbol> origin{0, 0};
    const auto fixed = std::find_if(r.entries.begin(), r.entries.end(),
                                    [&](const Claim1Entry& e) { return e.state == state_index(origin, 3); });
    REQUIRE(fixed != r.entries.end());
    CHECK(fixed->state_period == 1);
    CHECK(fixed->sequence_period == 1);
    const std::vector<Symbol> start{0, 1};
    const auto four = std::find_if(r.entries.begin(), r.entries.end(),
                                   [&](const Claim1Entry& e) { return e.state == state_index(start, 3); });
    CHECK(four->state_period == 4);
    CHECK(four->sequence_period == 8);
    CHECK_FALSE(four->j_divides_n);

    // The first projection fixes every state, while a seed (p, q) with p != q repeats with period 2.
    const Claim1Report h = claim1_report(hat_id(3, 2));
    std::size_t fixed_but_period_two = 0;
    for (const auto& e : h.entries) {
        CHECK(e.state_period == 1);
        CHECK(e.period_relation);
        CHECK(e.j_divides_nk);
        if (e.sequence_period == 2) {
            CHECK_FALSE(e.j_divides_n);
            ++fixed_but_period_two;
        }
    }
    CHECK(fixed_but_period_two == 6);

    auto rng = testgen::make_rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const FiniteTable t = testgen::table(rng, testgen::uniform(rng, 2, 4), testgen::uniform(rng, 1, 3));
        const Claim1Report rep = claim1_report(t);
        CHECK(rep.all_period_relations());
        CHECK(rep.all_j_divides_nk());
        for (const auto& e : rep.entries) {
            const std::size_t j = e.sequence_period;
            CHECK(e.state_period == j / std::gcd(j, t.k()));
        }
    }
}
