/**
 * @file engine.hpp
 * @brief Iteration of maps f: X^k -> X as self-maps on X^k.
 *
 * The first iterate of f sends a state (x_1, ..., x_k) to the next k terms
 * of the order-k recurrence a_{n+k} = f(a_n, ..., a_{n+k-1}):
 *
 *   c_1 = f(x_1, ..., x_k)
 *   c_j = f(x_j, ..., x_k, c_1, ..., c_{j-1})
 *
 * and the n-th iterate is the n-fold composition of that self-map. Everything
 * here is generic over the element type; the only capability required of an
 * element domain is an equality predicate (a tolerance-based one for floating
 * point domains, which then cannot back exact order claims).
 *
 * All functions are pure. Maps are captured by value in std::function, so a
 * map that is safe to call concurrently yields operations that are too.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "babbage/errors.hpp"

namespace babbage {

/// Ordered k-tuple, k >= 1. Index 0 holds x_1.
template <class E>
class State {
public:
    using value_type = E;

    explicit State(std::vector<E> elements) : elements_(std::move(elements)) {
        if (elements_.empty()) {
            throw ContractError("state arity must be at least 1");
        }
    }
    State(std::initializer_list<E> elements) : State(std::vector<E>(elements)) {}

    std::size_t arity() const noexcept { return elements_.size(); }
    std::span<const E> elements() const noexcept { return elements_; }
    const std::vector<E>& vector() const noexcept { return elements_; }

    const E& operator[](std::size_t i) const { return elements_[i]; }

    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    bool operator==(const State&) const = default;

private:
    std::vector<E> elements_;
};

/// f: X^k -> X. The callable receives exactly k arguments.
template <class E>
class IterableMap {
public:
    using Fn = std::function<E(std::span<const E>)>;

    IterableMap(std::size_t arity, Fn fn) : arity_(arity), fn_(std::move(fn)) {
        if (arity_ == 0) {
            throw ContractError("map arity must be at least 1");
        }
        if (!fn_) {
            throw ContractError("map callable is empty");
        }
    }

    std::size_t arity() const noexcept { return arity_; }

    E operator()(std::span<const E> args) const {
        if (args.size() != arity_) {
            throw ContractError("map of arity " + std::to_string(arity_) + " applied to " +
                                std::to_string(args.size()) + " arguments");
        }
        return fn_(args);
    }
    E operator()(const State<E>& s) const { return (*this)(s.elements()); }

private:
    std::size_t arity_;
    Fn fn_;
};

/// Frozen arguments for the induced one-variable map f_j(. | x_{-j}).
/// `position` is 1-based; `fixed` lists the other k-1 arguments in order.
template <class E>
struct InducedContext {
    std::size_t position;
    std::vector<E> fixed;
};

namespace detail {

template <class E>
void require_arity(const IterableMap<E>& f, const State<E>& s) {
    if (f.arity() != s.arity()) {
        throw ContractError("state of arity " + std::to_string(s.arity()) +
                            " passed to a map of arity " + std::to_string(f.arity()));
    }
}

}  // namespace detail

template <class E>
State<E> first_iterate(const IterableMap<E>& f, const State<E>& s) {
    detail::require_arity(f, s);
    const std::size_t k = s.arity();
    // Sliding window over x_1..x_k followed by the components produced so far.
    std::vector<E> seq;
    seq.reserve(2 * k);
    seq.insert(seq.end(), s.begin(), s.end());
    for (std::size_t j = 0; j < k; ++j) {
        E next = f(std::span<const E>(seq).subspan(j, k));
        seq.push_back(std::move(next));
    }
    return State<E>(std::vector<E>(std::make_move_iterator(seq.begin() + static_cast<std::ptrdiff_t>(k)),
                                   std::make_move_iterator(seq.end())));
}

/// n-fold composition of first_iterate; n = 0 returns s.
template <class E>
State<E> iterate(const IterableMap<E>& f, State<E> s, std::size_t n) {
    detail::require_arity(f, s);
    for (std::size_t i = 0; i < n; ++i) {
        s = first_iterate(f, s);
    }
    return s;
}

template <class E, class Eq = std::equal_to<E>>
bool states_equal(const State<E>& a, const State<E>& b, Eq eq = {}) {
    if (a.arity() != b.arity()) {
        return false;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (!eq(a[i], b[i])) {
            return false;
        }
    }
    return true;
}

template <class E>
struct Orbit {
    std::vector<State<E>> states;  ///< s, f^1(s), ... without the repeated start
    bool recurred = false;         ///< the state after the last listed one is s
};

/// Trajectory from s, stopping after max_steps states or when s comes back.
template <class E, class Eq = std::equal_to<E>>
Orbit<E> orbit(const IterableMap<E>& f, const State<E>& s, std::size_t max_steps, Eq eq = {}) {
    detail::require_arity(f, s);
    if (max_steps == 0) {
        throw ContractError("orbit needs max_steps >= 1");
    }
    Orbit<E> out;
    out.states.push_back(s);
    while (true) {
        State<E> next = first_iterate(f, out.states.back());
        if (states_equal(next, s, eq)) {
            out.recurred = true;
            break;
        }
        if (out.states.size() == max_steps) {
            break;
        }
        out.states.push_back(std::move(next));
    }
    return out;
}

/// Least n in 1..bound with f^n(s) = s.
template <class E, class Eq = std::equal_to<E>>
std::optional<std::size_t> point_involutory_order(const IterableMap<E>& f, const State<E>& s,
                                                  std::size_t bound, Eq eq = {}) {
    detail::require_arity(f, s);
    if (bound == 0) {
        throw ContractError("point_involutory_order needs bound >= 1");
    }
    State<E> cur = s;
    for (std::size_t n = 1; n <= bound; ++n) {
        cur = first_iterate(f, cur);
        if (states_equal(cur, s, eq)) {
            return n;
        }
    }
    return std::nullopt;
}

/// t -> f(x_1, ..., x_{j-1}, t, x_{j+1}, ..., x_k) with the x_{-j} taken from ctx.
template <class E>
std::function<E(const E&)> induced_self_map(const IterableMap<E>& f, InducedContext<E> ctx) {
    const std::size_t k = f.arity();
    if (ctx.position < 1 || ctx.position > k) {
        throw ContractError("induced position " + std::to_string(ctx.position) + " outside 1.." +
                            std::to_string(k));
    }
    if (ctx.fixed.size() + 1 != k) {
        throw ContractError("induced context must fix exactly k-1 = " + std::to_string(k - 1) +
                            " arguments");
    }
    return [f, ctx = std::move(ctx)](const E& t) {
        std::vector<E> args;
        args.reserve(ctx.fixed.size() + 1);
        const auto split = ctx.fixed.begin() + static_cast<std::ptrdiff_t>(ctx.position - 1);
        args.insert(args.end(), ctx.fixed.begin(), split);
        args.push_back(t);
        args.insert(args.end(), split, ctx.fixed.end());
        return f(std::span<const E>(args));
    };
}

/// Ordinary iteration of a self-map g: X -> X.
template <class E, class G>
E iterate_self_map(const G& g, E x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x = g(x);
    }
    return x;
}

}  // namespace babbage
