/**
 * @file recurrence.hpp
 * @brief Sequence view of a map f: X^k -> X, the recurrence a_{n+k} = f(a_n, ..., a_{n+k-1}).
 *
 * Terms are numbered from 1 in the comments below and from 0 in code.
 * The window of terms nk+1 .. nk+k equals the n-th iterate of the seed, which
 * is what consistency_check pins down.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "babbage/core/engine.hpp"
#include "babbage/errors.hpp"

namespace babbage {

inline constexpr std::size_t kDefaultPeriodBound = 10'000;

template <class E>
struct RecurrenceSpec {
    IterableMap<E> map;
    State<E> seed;

    RecurrenceSpec(IterableMap<E> f, State<E> s) : map(std::move(f)), seed(std::move(s)) {
        if (map.arity() != seed.arity()) {
            throw ContractError("seed arity " + std::to_string(seed.arity()) + " differs from map arity " +
                                std::to_string(map.arity()));
        }
    }

    std::size_t arity() const { return map.arity(); }
};

/// The first `count` terms, seed first. Requires count >= k.
template <class E>
std::vector<E> generate(const RecurrenceSpec<E>& spec, std::size_t count) {
    const std::size_t k = spec.arity();
    if (count < k) {
        throw ContractError("generate needs count >= k = " + std::to_string(k));
    }
    std::vector<E> seq(spec.seed.begin(), spec.seed.end());
    seq.reserve(count);
    while (seq.size() < count) {
        E next = spec.map(std::span<const E>(seq).subspan(seq.size() - k, k));
        seq.push_back(std::move(next));
    }
    return seq;
}

/// Terms nk+1..nk+k of the sequence agree with iterate(f, seed, n).
template <class E, class Eq = std::equal_to<E>>
bool consistency_check(const RecurrenceSpec<E>& spec, std::size_t n, Eq eq = {}) {
    const std::size_t k = spec.arity();
    const auto seq = generate(spec, (n + 1) * k);
    const State<E> window(std::vector<E>(seq.end() - static_cast<std::ptrdiff_t>(k), seq.end()));
    return states_equal(window, iterate(spec.map, spec.seed, n), eq);
}

struct CycleFinding {
    /// Minimal j with a_{i+j} = a_i for all i >= preperiod; absent when nothing repeats in the bound.
    std::optional<std::size_t> minimal_period;
    /// 0-based index of the first term of the periodic part.
    std::size_t preperiod = 0;
    /// 0-based index where the window starting at `preperiod` first reappears.
    std::size_t witness = 0;
};

/// Scans the first `bound` terms for the first repeated k-window. Windows determine
/// everything after them, so the first repeat at (p, q) gives preperiod p and minimal
/// period q - p, measured on the element sequence itself.
template <class E, class Eq = std::equal_to<E>>
CycleFinding detect_minimal_period(const RecurrenceSpec<E>& spec, std::size_t bound = kDefaultPeriodBound,
                                   Eq eq = {}) {
    if (bound == 0) {
        throw ContractError("detect_minimal_period needs bound >= 1");
    }
    const std::size_t k = spec.arity();
    const auto seq = generate(spec, std::max(bound, k));
    auto same_window = [&](std::size_t p, std::size_t q) {
        for (std::size_t i = 0; i < k; ++i) {
            if (!eq(seq[p + i], seq[q + i])) {
                return false;
            }
        }
        return true;
    };
    for (std::size_t q = 1; q + k <= seq.size(); ++q) {
        for (std::size_t p = 0; p < q; ++p) {
            if (same_window(p, q)) {
                return CycleFinding{q - p, p, q};
            }
        }
    }
    return CycleFinding{};
}

/// Lift of f to arity k' > k: the inputs x_1..x_k seed the recurrence, which is
/// extended with f up to x~_{k'}; the value is f(x~_{k'-k+1}, ..., x~_{k'}).
/// Inputs x_{k+1}..x_{k'} are not read.
template <class E>
IterableMap<E> augment(const IterableMap<E>& f, std::size_t target_arity) {
    const std::size_t k = f.arity();
    if (target_arity <= k) {
        throw ContractError("augment needs target arity > " + std::to_string(k));
    }
    return IterableMap<E>(target_arity, [f, k, target_arity](std::span<const E> x) {
        std::vector<E> seq(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(k));
        seq.reserve(target_arity);
        while (seq.size() < target_arity) {
            E next = f(std::span<const E>(seq).subspan(seq.size() - k, k));
            seq.push_back(std::move(next));
        }
        return f(std::span<const E>(seq).subspan(target_arity - k, k));
    });
}

}  // namespace babbage
