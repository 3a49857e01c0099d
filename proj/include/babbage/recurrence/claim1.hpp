/**
 * @file claim1.hpp
 * @brief Point periods of the first iterate versus sequence periods of the recurrence.
 *
 * For a state s on a cycle of f^1 with period n, the recurrence seeded at s is
 * purely periodic with some minimal period j. The report checks
 * n == j / gcd(j, k) and records which of j | n and j | n*k hold.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "babbage/table/finite_table.hpp"

namespace babbage {

struct Claim1Entry {
    std::size_t state = 0;            ///< state index
    std::size_t state_period = 0;     ///< n(s)
    std::size_t sequence_period = 0;  ///< j(s)
    bool period_relation = false;     ///< n == j / gcd(j, k)
    bool j_divides_n = false;
    bool j_divides_nk = false;
};

struct Claim1Report {
    std::size_t k = 0;
    std::vector<Claim1Entry> entries;  ///< ordered by state index
    std::size_t period_relation_holds = 0;
    std::size_t j_divides_n_holds = 0;
    std::size_t j_divides_nk_holds = 0;

    bool all_period_relations() const { return period_relation_holds == entries.size(); }
    bool all_j_divides_nk() const { return j_divides_nk_holds == entries.size(); }
};

/// One entry per state lying on a cycle of the first iterate.
Claim1Report claim1_report(const FiniteTable& t);

}  // namespace babbage
