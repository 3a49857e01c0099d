#include "babbage/table/finite_table.hpp"

#include <algorithm>
#include <string>

#include "babbage/errors.hpp"

namespace babbage {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
    }
    return out;
}

void require_positive(const Integer& n, const char* what) {
    if (n < 1) {
        throw ContractError(std::string(what) + " needs a positive order");
    }
}

void require_self_map(const std::vector<Symbol>& g, std::size_t m) {
    if (g.size() != m) {
        throw ContractError("self-map on X must list " + std::to_string(m) + " images");
    }
    for (Symbol v : g) {
        if (v >= m) {
            throw ContractError("self-map image " + std::to_string(v) + " outside 0.." + std::to_string(m - 1));
        }
    }
}

// Calls visit(base) for every state index whose digit at `axis` (0-based) is zero.
// The fiber through base is base + t * stride for t in 0..m-1.
template <class Visit>
void for_each_fiber(std::size_t m, std::size_t k, std::size_t axis, Visit&& visit) {
    const std::size_t stride = ipow(m, k - 1 - axis);
    const std::size_t block = stride * m;
    const std::size_t total = ipow(m, k);
    for (std::size_t hi = 0; hi < total; hi += block) {
        for (std::size_t lo = 0; lo < stride; ++lo) {
            visit(hi + lo, stride);
        }
    }
}

// n-th iterate of a self-map on 0..m-1 is the identity.
bool self_map_power_is_identity(const std::vector<std::size_t>& images, const Integer& n) {
    if (!is_bijection(images)) {
        return false;
    }
    return Permutation(images).power_is_identity(n);
}

}  // namespace

std::size_t state_count(std::size_t m, std::size_t k, std::size_t max_states) {
    if (m == 0 || k == 0) {
        throw ContractError("table needs m >= 1 and k >= 1");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > max_states / m) {
            throw ResourceError("state space " + std::to_string(m) + "^" + std::to_string(k) +
                                " exceeds the budget of " + std::to_string(max_states) + " states");
        }
        total *= m;
    }
    return total;
}

std::size_t state_index(std::span<const Symbol> s, std::size_t m) {
    std::size_t idx = 0;
    for (Symbol x : s) {
        if (x >= m) {
            throw ContractError("state component " + std::to_string(x) + " outside 0.." + std::to_string(m - 1));
        }
        idx = idx * m + x;
    }
    return idx;
}

std::vector<Symbol> state_from_index(std::size_t idx, std::size_t m, std::size_t k) {
    if (m == 0 || k == 0) {
        throw ContractError("state_from_index needs m >= 1 and k >= 1");
    }
    std::vector<Symbol> out(k);
    for (std::size_t i = k; i-- > 0;) {
        out[i] = static_cast<Symbol>(idx % m);
        idx /= m;
    }
    if (idx != 0) {
        throw ContractError("state index outside 0..m^k-1");
    }
    return out;
}

FiniteTable::FiniteTable(std::size_t m, std::size_t k, std::vector<Symbol> entries, std::size_t max_states)
    : m_(m), k_(k), entries_(std::move(entries)) {
    const std::size_t n = state_count(m, k, max_states);
    if (entries_.size() != n) {
        throw ContractError("table with m=" + std::to_string(m) + ", k=" + std::to_string(k) + " needs " +
                            std::to_string(n) + " entries, got " + std::to_string(entries_.size()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (entries_[i] >= m) {
            throw ContractError("table entry " + std::to_string(i) + " = " + std::to_string(entries_[i]) +
                                " outside 0.." + std::to_string(m - 1));
        }
    }
}

FiniteTable FiniteTable::from_function(std::size_t m, std::size_t k,
                                       const std::function<Symbol(std::span<const Symbol>)>& fn,
                                       std::size_t max_states) {
    const std::size_t n = state_count(m, k, max_states);
    std::vector<Symbol> entries(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const auto s = state_from_index(idx, m, k);
        entries[idx] = fn(s);
    }
    return FiniteTable(m, k, std::move(entries), max_states);
}

Symbol FiniteTable::operator()(std::span<const Symbol> args) const {
    if (args.size() != k_) {
        throw ContractError("table of arity " + std::to_string(k_) + " applied to " +
                            std::to_string(args.size()) + " arguments");
    }
    return entries_[state_index(args, m_)];
}

IterableMap<Symbol> FiniteTable::as_map() const {
    return IterableMap<Symbol>(k_, [t = *this](std::span<const Symbol> args) { return t(args); });
}

std::vector<std::size_t> first_iterate_indices(const FiniteTable& t) {
    const auto f = t.as_map();
    std::vector<std::size_t> out(t.size());
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        const State<Symbol> s(state_from_index(idx, t.m(), t.k()));
        out[idx] = state_index(first_iterate(f, s).elements(), t.m());
    }
    return out;
}

std::optional<Permutation> as_permutation(const FiniteTable& t) {
    auto images = first_iterate_indices(t);
    if (!is_bijection(images)) {
        return std::nullopt;
    }
    return Permutation(std::move(images));
}

std::size_t table_iterate(const FiniteTable& t, std::size_t state, long n) {
    if (state >= t.size()) {
        throw ContractError("state index outside 0..m^k-1");
    }
    if (n < 0) {
        const auto perm = as_permutation(t);
        if (!perm) {
            throw ContractError("negative iterate of a table whose first iterate is not bijective");
        }
        return perm->power(n)(state);
    }
    const auto images = first_iterate_indices(t);
    for (long i = 0; i < n; ++i) {
        state = images[state];
    }
    return state;
}

std::vector<std::size_t> CycleReport::cycle_lengths() const {
    std::vector<std::size_t> out;
    out.reserve(cycles.size());
    for (const auto& c : cycles) {
        out.push_back(c.size());
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CycleReport cycle_report(const FiniteTable& t) {
    const auto images = first_iterate_indices(t);
    CycleReport report;
    report.bijective = is_bijection(images);
    if (report.bijective) {
        const Permutation perm(images);
        report.cycles = perm.cycles();
        report.minimal_order = perm.order();
    } else {
        // Walk the functional graph; a walk that closes on its own path found a new cycle.
        enum class Mark : unsigned char { fresh, on_path, done };
        std::vector<Mark> mark(images.size(), Mark::fresh);
        for (std::size_t start = 0; start < images.size(); ++start) {
            std::vector<std::size_t> path;
            std::size_t p = start;
            while (mark[p] == Mark::fresh) {
                mark[p] = Mark::on_path;
                path.push_back(p);
                p = images[p];
            }
            if (mark[p] == Mark::on_path) {
                const auto first = std::find(path.begin(), path.end(), p);
                std::vector<std::size_t> cycle(first, path.end());
                std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
                report.cycles.push_back(std::move(cycle));
            }
            for (std::size_t q : path) {
                mark[q] = Mark::done;
            }
        }
        std::sort(report.cycles.begin(), report.cycles.end());
    }
    for (const auto& c : report.cycles) {
        for (std::size_t p : c) {
            report.per_point_period[p] = c.size();
        }
    }
    return report;
}

bool is_n_involutory(const FiniteTable& t, const Integer& n) {
    require_positive(n, "is_n_involutory");
    const auto perm = as_permutation(t);
    return perm && perm->power_is_identity(n);
}

bool is_induced_involutory(const FiniteTable& t, const Integer& n, std::optional<std::size_t> position) {
    require_positive(n, "is_induced_involutory");
    if (position && (*position < 1 || *position > t.k())) {
        throw ContractError("argument position " + std::to_string(*position) + " outside 1.." +
                            std::to_string(t.k()));
    }
    const std::size_t m = t.m();
    const auto& e = t.entries();
    for (std::size_t axis = 0; axis < t.k(); ++axis) {
        if (position && *position != axis + 1) {
            continue;
        }
        bool ok = true;
        for_each_fiber(m, t.k(), axis, [&](std::size_t base, std::size_t stride) {
            if (!ok) {
                return;
            }
            std::vector<std::size_t> g(m);
            for (std::size_t x = 0; x < m; ++x) {
                g[x] = e[base + x * stride];
            }
            ok = self_map_power_is_identity(g, n);
        });
        if (!ok) {
            return false;
        }
    }
    return true;
}

bool is_symmetric(const FiniteTable& t) {
    const std::size_t m = t.m();
    for (std::size_t i = 0; i + 1 < t.k(); ++i) {
        for (std::size_t idx = 0; idx < t.size(); ++idx) {
            auto s = state_from_index(idx, m, t.k());
            std::swap(s[i], s[i + 1]);
            if (t.at_index(state_index(s, m)) != t.at_index(idx)) {
                return false;
            }
        }
    }
    return true;
}

bool is_persymmetric(const FiniteTable& t) {
    if (t.k() != 2) {
        throw ContractError("persymmetry is defined for k = 2 tables only");
    }
    const auto m = static_cast<Symbol>(t.m());
    for (Symbol i = 0; i < m; ++i) {
        for (Symbol j = 0; j < m; ++j) {
            const Symbol a[2] = {i, j};
            const Symbol b[2] = {static_cast<Symbol>(m - 1 - j), static_cast<Symbol>(m - 1 - i)};
            if (t(a) != t(b)) {
                return false;
            }
        }
    }
    return true;
}

PropertyProfile property_profile(const FiniteTable& t, std::size_t max_order) {
    PropertyProfile p;
    p.symmetric = is_symmetric(t);
    for (std::size_t n = 1; n <= max_order; ++n) {
        for (std::size_t j = 1; j <= t.k(); ++j) {
            p.ii_orders[{n, j}] = is_induced_involutory(t, Integer(static_cast<unsigned long>(n)), j);
        }
    }
    p.ii = is_induced_involutory(t, Integer(2));
    return p;
}

FiniteTable hat_id(std::size_t m, std::size_t k, std::size_t max_states) {
    return FiniteTable::from_function(m, k, [](std::span<const Symbol> x) { return x[0]; }, max_states);
}

bool is_involution(const std::vector<Symbol>& g) {
    for (Symbol x = 0; x < g.size(); ++x) {
        if (g[x] >= g.size() || g[g[x]] != x) {
            return false;
        }
    }
    return true;
}

FiniteTable project_compose(const std::vector<Symbol>& g, std::size_t k, std::size_t max_states) {
    require_self_map(g, g.size());
    if (!is_involution(g)) {
        throw ContractError("project_compose needs an involution on X");
    }
    return FiniteTable::from_function(g.size(), k, [&g](std::span<const Symbol> x) { return g[x[0]]; },
                                      max_states);
}

FiniteTable conjugate(const FiniteTable& t, const std::vector<Symbol>& g) {
    require_self_map(g, t.m());
    std::vector<std::size_t> as_sizes(g.begin(), g.end());
    if (!is_bijection(as_sizes)) {
        throw ContractError("conjugating map is not a bijection on X");
    }
    std::vector<Symbol> g_inv(g.size());
    for (Symbol y = 0; y < g.size(); ++y) {
        g_inv[g[y]] = y;
    }
    std::vector<Symbol> entries(t.size());
    std::vector<Symbol> image(t.k());
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        const auto y = state_from_index(idx, t.m(), t.k());
        for (std::size_t i = 0; i < y.size(); ++i) {
            image[i] = g[y[i]];
        }
        entries[idx] = g_inv[t(image)];
    }
    return FiniteTable(t.m(), t.k(), std::move(entries), t.size());
}

void for_each_ii_table(std::size_t m, std::size_t k, const std::function<bool(const FiniteTable&)>& visit,
                       std::size_t max_states) {
    const std::size_t n = state_count(m, k, max_states);
    std::vector<std::size_t> stride(k);
    for (std::size_t axis = 0; axis < k; ++axis) {
        stride[axis] = ipow(m, k - 1 - axis);
    }
    constexpr Symbol kUnset = static_cast<Symbol>(-1);
    std::vector<Symbol> entries(n, kUnset);

    // Every fiber must be an involution: on the fiber through idx (coordinate x along axis),
    // setting g(x) = v requires g(v) = x if already set, and no other set point may map to x.
    auto consistent = [&](std::size_t idx, Symbol v) {
        for (std::size_t axis = 0; axis < k; ++axis) {
            const auto x = static_cast<Symbol>((idx / stride[axis]) % m);
            const std::size_t base = idx - x * stride[axis];
            const Symbol back = entries[base + v * stride[axis]];
            if (v != x && back != kUnset && back != x) {
                return false;
            }
            for (Symbol s = 0; s < m; ++s) {
                if (s != x && s != v && entries[base + s * stride[axis]] == x) {
                    return false;
                }
            }
        }
        return true;
    };

    bool keep_going = true;
    std::function<void(std::size_t)> fill = [&](std::size_t idx) {
        if (!keep_going) {
            return;
        }
        if (idx == n) {
            keep_going = visit(FiniteTable(m, k, entries, max_states));
            return;
        }
        for (Symbol v = 0; v < m && keep_going; ++v) {
            if (consistent(idx, v)) {
                entries[idx] = v;
                fill(idx + 1);
                entries[idx] = kUnset;
            }
        }
    };
    fill(0);
}

std::vector<FiniteTable> enumerate_ii_tables(std::size_t m, std::size_t k, std::size_t max_states) {
    std::vector<FiniteTable> out;
    for_each_ii_table(
        m, k,
        [&](const FiniteTable& t) {
            out.push_back(t);
            return true;
        },
        max_states);
    return out;
}

Integer count_involutions_recursive(std::size_t m) {
    Integer prev = 1;  // T(0)
    Integer cur = 1;   // T(1)
    if (m == 0) {
        return prev;
    }
    for (std::size_t i = 2; i <= m; ++i) {
        Integer next = cur + static_cast<unsigned long>(i - 1) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Integer count_involutions_brute_force(std::size_t m) {
    if (m > kBruteForceInvolutionLimit) {
        throw ResourceError("brute-force involution count limited to m <= " +
                            std::to_string(kBruteForceInvolutionLimit));
    }
    std::vector<Symbol> g(m, 0);
    unsigned long count = 0;
    while (true) {
        if (is_involution(g)) {
            ++count;
        }
        std::size_t i = 0;
        while (i < m && ++g[i] == m) {
            g[i] = 0;
            ++i;
        }
        if (i == m) {
            break;
        }
    }
    return Integer(count);
}

Integer count_involutions(std::size_t m) {
    if (m < 1) {
        throw ContractError("count_involutions needs m >= 1");
    }
    Integer t = count_involutions_recursive(m);
    if (m <= kInvolutionCrossCheckLimit) {
        const Integer brute = count_involutions_brute_force(m);
        if (brute != t) {
            throw std::logic_error("involution counts disagree at m=" + std::to_string(m) + ": recursion " +
                                   t.get_str() + ", brute force " + brute.get_str());
        }
    }
    return t;
}

}  // namespace babbage
