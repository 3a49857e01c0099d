#include "babbage/recurrence/claim1.hpp"

#include <numeric>
#include <stdexcept>

#include "babbage/recurrence/recurrence.hpp"

namespace babbage {

Claim1Report claim1_report(const FiniteTable& t) {
    const CycleReport cycles = cycle_report(t);
    const auto f = t.as_map();
    const std::size_t k = t.k();

    Claim1Report report;
    report.k = k;
    for (const auto& [idx, n] : cycles.per_point_period) {
        const RecurrenceSpec<Symbol> spec(f, State<Symbol>(state_from_index(idx, t.m(), k)));
        // The sequence repeats with period n*k, so a prefix of (n+1)*k terms holds a repeated window.
        const CycleFinding found = detect_minimal_period(spec, (n + 1) * k);
        if (!found.minimal_period || found.preperiod != 0) {
            throw std::logic_error("state on a cycle of f^1 seeded a sequence that is not purely periodic");
        }
        Claim1Entry e;
        e.state = idx;
        e.state_period = n;
        e.sequence_period = *found.minimal_period;
        const std::size_t j = e.sequence_period;
        e.period_relation = n == j / std::gcd(j, k);
        e.j_divides_n = n % j == 0;
        e.j_divides_nk = (n * k) % j == 0;
        report.period_relation_holds += e.period_relation ? 1 : 0;
        report.j_divides_n_holds += e.j_divides_n ? 1 : 0;
        report.j_divides_nk_holds += e.j_divides_nk ? 1 : 0;
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace babbage
