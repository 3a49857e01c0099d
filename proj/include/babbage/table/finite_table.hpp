/**
 * @file finite_table.hpp
 * @brief Maps f: X^k -> X on X = {0, ..., m-1}, stored as dense tables.
 *
 * Entries are kept in row-major order with the last argument varying fastest:
 * index(x_1, ..., x_k) = sum_i x_i * m^(k-i). On a finite domain the first
 * iterate is a self-map of the m^k state indices, so periodicity questions
 * reduce to cycle structure of that self-map.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "babbage/core/engine.hpp"
#include "babbage/exact/rational.hpp"
#include "babbage/table/permutation.hpp"

namespace babbage {

using Symbol = std::uint32_t;

/// Default cap on m^k for anything that materializes or walks the state space.
inline constexpr std::size_t kDefaultStateBudget = 1'000'000;

/// m^k, or ResourceError when it exceeds `max_states`.
std::size_t state_count(std::size_t m, std::size_t k, std::size_t max_states = kDefaultStateBudget);

std::size_t state_index(std::span<const Symbol> s, std::size_t m);
std::vector<Symbol> state_from_index(std::size_t idx, std::size_t m, std::size_t k);

class FiniteTable {
public:
    /// Validates size m^k and the range of every entry (ContractError), and the budget (ResourceError).
    FiniteTable(std::size_t m, std::size_t k, std::vector<Symbol> entries,
                std::size_t max_states = kDefaultStateBudget);

    /// Tabulates `fn` over all of X^k.
    static FiniteTable from_function(std::size_t m, std::size_t k,
                                     const std::function<Symbol(std::span<const Symbol>)>& fn,
                                     std::size_t max_states = kDefaultStateBudget);

    std::size_t m() const noexcept { return m_; }
    std::size_t k() const noexcept { return k_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<Symbol>& entries() const noexcept { return entries_; }

    Symbol at_index(std::size_t idx) const { return entries_.at(idx); }
    Symbol operator()(std::span<const Symbol> args) const;

    /// The table as an engine map; the map holds its own copy of the entries.
    IterableMap<Symbol> as_map() const;

    bool operator==(const FiniteTable&) const = default;

private:
    std::size_t m_;
    std::size_t k_;
    std::vector<Symbol> entries_;
};

/// idx -> state_index(first_iterate(t, state_from_index(idx))).
std::vector<std::size_t> first_iterate_indices(const FiniteTable& t);

/// The first iterate as a permutation of X^k when it is injective.
std::optional<Permutation> as_permutation(const FiniteTable& t);

/// State-index result of f^n; negative n needs a bijective first iterate.
std::size_t table_iterate(const FiniteTable& t, std::size_t state, long n);

struct CycleReport {
    bool bijective = false;
    /// Cycles of the first iterate. For a bijection these partition X^k; otherwise they
    /// are the cycles of the functional graph (eventually periodic transients excluded).
    std::vector<std::vector<std::size_t>> cycles;
    /// lcm of cycle lengths, present iff bijective.
    std::optional<Integer> minimal_order;
    /// state index -> length of its cycle, for every state lying on a cycle.
    std::map<std::size_t, std::size_t> per_point_period;

    /// Cycle lengths in descending order.
    std::vector<std::size_t> cycle_lengths() const;
};

CycleReport cycle_report(const FiniteTable& t);

/// f^n = id on X^k. Requires n >= 1.
bool is_n_involutory(const FiniteTable& t, const Integer& n);

/// II-n{j} when `position` (1-based) is given, II-n otherwise.
bool is_induced_involutory(const FiniteTable& t, const Integer& n,
                           std::optional<std::size_t> position = std::nullopt);

bool is_symmetric(const FiniteTable& t);

/// Symmetry across the antidiagonal, f(i, j) = f(m-1-j, m-1-i). Only defined for k = 2.
bool is_persymmetric(const FiniteTable& t);

struct PropertyProfile {
    bool symmetric = false;
    /// (n, j) -> II-n{j} for n in 1..max_order and j in 1..k.
    std::map<std::pair<std::size_t, std::size_t>, bool> ii_orders;
    bool ii = false;
};

PropertyProfile property_profile(const FiniteTable& t, std::size_t max_order);

/// The first projection (x_1, ..., x_k) -> x_1, whose first iterate is the identity.
FiniteTable hat_id(std::size_t m, std::size_t k, std::size_t max_states = kDefaultStateBudget);

/// (x_1, ..., x_k) -> g(x_1) for an involution g on X.
FiniteTable project_compose(const std::vector<Symbol>& g, std::size_t k,
                            std::size_t max_states = kDefaultStateBudget);

/// (y_1, ..., y_k) -> g^{-1}(f(g(y_1), ..., g(y_k))) for a bijection g on X.
FiniteTable conjugate(const FiniteTable& t, const std::vector<Symbol>& g);

/// Emits every II table on X^k in ascending order of the entry list.
/// The visitor returns false to stop early.
void for_each_ii_table(std::size_t m, std::size_t k, const std::function<bool(const FiniteTable&)>& visit,
                       std::size_t max_states = kDefaultStateBudget);

std::vector<FiniteTable> enumerate_ii_tables(std::size_t m, std::size_t k,
                                             std::size_t max_states = kDefaultStateBudget);

bool is_involution(const std::vector<Symbol>& g);

/// Largest m accepted by count_involutions_brute_force.
inline constexpr std::size_t kBruteForceInvolutionLimit = 8;
/// count_involutions cross-checks against brute force up to this m.
inline constexpr std::size_t kInvolutionCrossCheckLimit = 7;

/// T(m) = T(m-1) + (m-1) T(m-2), T(0) = T(1) = 1.
Integer count_involutions_recursive(std::size_t m);
/// Enumerates all m^m self-maps. ResourceError above kBruteForceInvolutionLimit.
Integer count_involutions_brute_force(std::size_t m);
/// Recursive count, cross-checked against brute force when m is small enough.
Integer count_involutions(std::size_t m);

}  // namespace babbage
