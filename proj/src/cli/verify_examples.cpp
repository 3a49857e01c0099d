#include "babbage/cli/verify_examples.hpp"

#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "babbage/affine/affine.hpp"
#include "babbage/affine/closed_forms.hpp"
#include "babbage/cli/commands.hpp"
#include "babbage/dsl/compile.hpp"
#include "babbage/recurrence/recurrence.hpp"
#include "babbage/table/table_format.hpp"

namespace babbage::cli {

namespace {

using dsl::Scalar;

constexpr std::uint64_t kRngSeed = 0x5eed'1815;

// Thrown by a check to report what went wrong.
struct Mismatch {
    std::string detail;
};

void expect(bool ok, const std::string& detail) {
    if (!ok) {
        throw Mismatch{detail};
    }
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

Scalar q(const Rational& r) { return Scalar(1, r); }

FiniteTable load(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_table(in);
}

std::string run_text(CommandConfig c) {
    const CommandResult r = run(c);
    expect(r.exit_code == kExitOk, c.command + " exited with " + std::to_string(r.exit_code) + ": " + r.err);
    return r.out;
}

nlohmann::json run_json(CommandConfig c) {
    c.json = true;
    return nlohmann::json::parse(run_text(std::move(c)));
}

void check_finite_example(std::string_view text, const std::vector<std::size_t>& lengths, const std::string& order) {
    const FiniteTable t = load(text);
    const CycleReport cr = cycle_report(t);
    expect(cr.cycle_lengths() == lengths, "unexpected cycle lengths");
    expect(cr.minimal_order && cr.minimal_order->get_str() == order, "unexpected minimal order");
    expect(is_symmetric(t), "table is not symmetric");
    expect(is_induced_involutory(t, Integer(3)), "table is not II-3");
    if (t.k() == 2 && t.m() == 4) {
        expect(is_persymmetric(t), "table is not persymmetric");
    }
    CommandConfig c;
    c.table_text = std::string(text);
    c.command = "order";
    expect(run_text(c) == order + "\n", "order command disagrees");
    c.command = "check-ii";
    c.ii_order = "3";
    expect(run_text(c) == "true\n", "check-ii command disagrees");
    c.command = "symmetric";
    c.ii_order.reset();
    expect(run_text(c) == "true\n", "symmetric command disagrees");
}

void check_fibonacci() {
    const auto def = dsl::parse_map_def("f(x1, x2) = x1 + x2");
    const auto map = dsl::to_iterable_map(def, 1);
    const auto fast = build_first_iterate(dsl::to_affine(def, 1));
    std::mt19937_64 rng(kRngSeed);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational x1 = random_rational(rng);
        const Rational x2 = random_rational(rng);
        const State<Scalar> seed{q(x1), q(x2)};
        State<Scalar> engine = seed;
        for (std::size_t n = 0; n <= 30; ++n) {
            const State<Rational> closed = fibonacci_closed_form(n, State<Rational>{x1, x2});
            const State<Scalar> lifted{q(closed[0]), q(closed[1])};
            expect(engine == lifted, "engine differs from closed form at n=" + std::to_string(n));
            expect(affine_iterate(fast, seed, n) == lifted, "matrix path differs at n=" + std::to_string(n));
            engine = first_iterate(map, engine);
        }
    }
}

std::string sum_map_text(std::size_t k, const Rational& a) {
    std::string params;
    std::string body = a.sign() < 0 ? "(0 - " + (-a).to_string() + ")" : a.to_string();
    for (std::size_t i = 1; i <= k; ++i) {
        params += (i > 1 ? ", x" : "x") + std::to_string(i);
        body += " - x" + std::to_string(i);
    }
    return "f(" + params + ") = " + body;
}

void check_sum_map() {
    std::mt19937_64 rng(kRngSeed + 1);
    for (std::size_t k = 1; k <= 5; ++k) {
        for (int trial = 0; trial < 10; ++trial) {
            const Rational a = random_rational(rng);
            const auto def = dsl::parse_map_def(sum_map_text(k, a));
            const auto map = dsl::to_iterable_map(def, 1);
            std::vector<Scalar> xs;
            for (std::size_t i = 0; i < k; ++i) {
                xs.push_back(q(random_rational(rng)));
            }
            const State<Scalar> seed(xs);
            State<Scalar> engine = seed;
            for (std::size_t n = 0; n <= 2 * (k + 1); ++n) {
                expect(engine == sum_map_closed_form(k, q(a), n, seed),
                       "k=" + std::to_string(k) + " differs at n=" + std::to_string(n));
                engine = first_iterate(map, engine);
            }
            const auto order = affine_involutory_order(build_first_iterate(dsl::to_affine(def, 1)), 50);
            expect(order && *order == k + 1, "involutory order is not k+1 for k=" + std::to_string(k));
        }
    }
}

void check_roots_of_unity() {
    const auto def = dsl::parse_map_def("f(x1, x2) = zeta(3)*x1 + zeta(3)^2*x2");
    expect(def.field_order == 3, "field is not Q(zeta_3)");
    const auto map = dsl::to_iterable_map(def, 3);
    const RootsMap roots;
    const std::vector<Scalar> grid = {Scalar::zero(3), Scalar::one(3), Scalar(3, Rational(Integer(-7), Integer(2))),
                                      Scalar::zeta(3, 1), Scalar::zeta(3, 2) + Scalar(3, Rational(5))};
    for (const auto& x1 : grid) {
        for (const auto& x2 : grid) {
            const auto first = induced_self_map(map, InducedContext<Scalar>{1, {x2}});
            const auto second = induced_self_map(map, InducedContext<Scalar>{2, {x1}});
            expect(iterate_self_map(first, x1, 3) == x1, "first induced map is not 3-involutory");
            expect(iterate_self_map(second, x2, 3) == x2, "second induced map is not 3-involutory");
            expect(linear_roots_checks(roots, RootsVariant::induced_first, 3, State<Scalar>{x1, x2})[0] == x1,
                   "first induced closed form");
            expect(linear_roots_checks(roots, RootsVariant::induced_second, 3, State<Scalar>{x1, x2})[0] == x2,
                   "second induced closed form");
        }
    }
    const State<Scalar> seed{Scalar(3, Rational(2)), Scalar::zeta(3, 1) - Scalar(3, Rational(1))};
    State<Scalar> engine = seed;
    for (std::size_t n = 0; n <= 12; ++n) {
        expect(engine == linear_roots_checks(roots, RootsVariant::full, n, seed),
               "full iterate formula differs at n=" + std::to_string(n));
        engine = first_iterate(map, engine);
    }
    const auto order = affine_involutory_order(build_first_iterate(dsl::to_affine(def, 3)), 50);
    expect(!order, "found an involutory order up to 50");
    const std::vector<Scalar> p{Scalar::one(3), Scalar::zero(3)};
    const std::vector<Scalar> p_swapped{Scalar::zero(3), Scalar::one(3)};
    expect(map(p) != map(p_swapped), "no asymmetry at (1, 0)");

    CommandConfig c;
    c.definition = "f(x1, x2) = zeta(3)*x1 + zeta(3)^2*x2";
    c.command = "check-ii";
    c.ii_order = "3";
    expect(run_text(c) == "true\n", "check-ii command disagrees");
    c.command = "symmetric";
    expect(run_text(c) == "false\n", "symmetric command disagrees");
}

void check_augmentation() {
    std::mt19937_64 rng(kRngSeed + 2);
    for (const std::string a : {"0", "5", "-3/7"}) {
        const auto def = dsl::parse_map_def("f(x1, x2) = " + a + " - x1 - x2");
        const auto lifted = augment(dsl::to_iterable_map(def, 1), 3);
        for (int trial = 0; trial < 1000; ++trial) {
            const std::vector<Scalar> x{q(random_rational(rng)), q(random_rational(rng)), q(random_rational(rng))};
            expect(lifted(x) == x[0], "lift is not the first projection");
        }
        CommandConfig c;
        c.command = "augment";
        c.definition = "f(x1, x2) = " + a + " - x1 - x2";
        c.to = 3;
        expect(run_text(c) == "f(x1, x2, x3) = x1\n", "augment command disagrees");
    }
}

void check_cli_iterate() {
    CommandConfig fib;
    fib.command = "iterate";
    fib.definition = "f(x1,x2)=x1+x2";
    fib.seed = "1,1";
    fib.n = 5;
    expect(run_text(fib) == "89 144\n", "Fibonacci iterate text");

    struct Case {
        std::string def;
        std::string seed;
        long n;
    };
    const std::vector<Case> cases = {
        {"f(x1, x2) = x1 + x2", "1/2, -3", 17},
        {"f(x1, x2, x3) = 5 - x1 - x2 - x3", "1, 2, 3", 7},
        {"f(x1, x2) = zeta(3)*x1 + zeta(3)^2*x2", "1, zeta(3)", 4},
    };
    for (const auto& cs : cases) {
        CommandConfig c;
        c.command = "iterate";
        c.definition = cs.def;
        c.seed = cs.seed;
        c.n = cs.n;
        const auto def = dsl::parse_map_def(cs.def);
        const auto seeds = dsl::parse_scalars(cs.seed);
        const std::size_t order = dsl::combine_orders(def.field_order, seeds.field_order);
        const State<Scalar> out = iterate(dsl::to_iterable_map(def, order), State<Scalar>(dsl::evaluate_scalars(seeds, order)),
                                          static_cast<std::size_t>(cs.n));
        nlohmann::json expected = nlohmann::json::array();
        for (const auto& x : out) {
            expected.push_back(dsl::to_source(x));
        }
        expect(run_json(c)["state"] == expected, "iterate disagrees for " + cs.def);
    }

    for (const auto text : {kExample6Table, kExample7Table}) {
        const FiniteTable t = load(text);
        for (long n : {1L, 4L, 15L, -3L}) {
            CommandConfig c;
            c.command = "iterate";
            c.table_text = std::string(text);
            c.seed = "0, 1";
            c.n = n;
            const std::vector<Symbol> start{0, 1};
            const auto expected = state_from_index(table_iterate(t, state_index(start, t.m()), n), t.m(), t.k());
            expect(run_json(c)["state"].get<std::vector<Symbol>>() == expected, "table iterate disagrees");
        }
    }
}

ExampleCheck attempt(const std::string& name, const std::function<void()>& body) {
    try {
        body();
        return ExampleCheck{name, true, ""};
    } catch (const Mismatch& m) {
        return ExampleCheck{name, false, m.detail};
    } catch (const std::exception& e) {
        return ExampleCheck{name, false, e.what()};
    }
}

}  // namespace

std::vector<ExampleCheck> verify_examples() {
    return {
        attempt("3x2 table: cycles 4 4 1, order 4, symmetric, II-3",
                [] { check_finite_example(kExample6Table, {4, 4, 1}, "4"); }),
        attempt("4x2 table: cycles 15 1, order 15, symmetric, persymmetric, II-3",
                [] { check_finite_example(kExample7Table, {15, 1}, "15"); }),
        attempt("Fibonacci map: closed form, engine and matrix path agree for n <= 30", check_fibonacci),
        attempt("A - sum map: closed form agrees with engine, order k+1 for k <= 5", check_sum_map),
        attempt("roots-of-unity map: II-3, not involutory up to 50, asymmetric", check_roots_of_unity),
        attempt("lift of the k=2 sum map to arity 3 is the first projection", check_augmentation),
        attempt("iterate command agrees with library calls", check_cli_iterate),
    };
}

}  // namespace babbage::cli
