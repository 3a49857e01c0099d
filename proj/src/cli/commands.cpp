#include "babbage/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <new>
#include <sstream>

#include <json.hpp>

#include "babbage/affine/affine.hpp"
#include "babbage/cli/verify_examples.hpp"
#include "babbage/core/engine.hpp"
#include "babbage/dsl/compile.hpp"
#include "babbage/errors.hpp"
#include "babbage/recurrence/claim1.hpp"
#include "babbage/recurrence/recurrence.hpp"
#include "babbage/table/table_format.hpp"

namespace babbage::cli {

namespace {

using nlohmann::json;
using dsl::Scalar;

struct Report {
    std::string text;
    json data = json::object();
    int exit_code = kExitOk;
};

struct Input {
    std::optional<dsl::MapDefinition> def;
    std::optional<FiniteTable> table;
};

int input_count(const CommandConfig& c) {
    return static_cast<int>(c.definition.has_value()) + static_cast<int>(c.table_path.has_value()) +
           static_cast<int>(c.table_text.has_value());
}

Input load_input(const CommandConfig& c) {
    const int count = input_count(c);
    if (count != 1) {
        throw ContractError(c.command + " needs exactly one of --def or --table");
    }
    Input in;
    if (c.definition) {
        in.def = dsl::parse_map_def(*c.definition);
    } else if (c.table_path) {
        in.table = read_table_file(*c.table_path, c.max_states);
    } else {
        std::istringstream stream(*c.table_text);
        in.table = read_table(stream, c.max_states);
    }
    return in;
}

void require_no_input(const CommandConfig& c) {
    if (input_count(c) != 0) {
        throw ContractError(c.command + " takes no --def or --table");
    }
}

FiniteTable require_table(const CommandConfig& c) {
    Input in = load_input(c);
    if (!in.table) {
        throw ContractError(c.command + " needs --table");
    }
    return std::move(*in.table);
}

template <class T>
const T& require(const std::optional<T>& v, const std::string& flag, const CommandConfig& c) {
    if (!v) {
        throw ContractError(c.command + " needs " + flag);
    }
    return *v;
}

std::string join_elements(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += parts[i].find(' ') == std::string::npos ? parts[i] : "(" + parts[i] + ")";
    }
    return out;
}

std::vector<std::string> scalar_strings(const State<Scalar>& s) {
    std::vector<std::string> out;
    for (const auto& x : s) {
        out.push_back(dsl::to_source(x));
    }
    return out;
}

std::string state_text(const State<Scalar>& s) { return join_elements(scalar_strings(s)); }
json state_json(const State<Scalar>& s) { return scalar_strings(s); }

std::string symbols_text(const std::vector<Symbol>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i > 0 ? " " : "") + std::to_string(s[i]);
    }
    return out;
}

std::vector<Symbol> parse_symbols(const std::string& text, std::size_t m) {
    const auto parsed = dsl::parse_scalars(text);
    std::vector<Symbol> out;
    for (const auto& v : dsl::evaluate_scalars(parsed, parsed.field_order)) {
        if (!v.is_rational() || !v.as_rational().is_integer()) {
            throw ContractError("table symbols must be integers, got " + dsl::to_source(v));
        }
        const Integer z = v.as_rational().numerator();
        if (z < 0 || z >= static_cast<unsigned long>(m)) {
            throw ContractError("symbol " + z.get_str() + " outside 0.." + std::to_string(m - 1));
        }
        out.push_back(static_cast<Symbol>(z.get_ui()));
    }
    return out;
}

std::size_t table_seed_index(const FiniteTable& t, const CommandConfig& c) {
    const auto s = parse_symbols(require(c.seed, "--seed", c), t.m());
    if (s.size() != t.k()) {
        throw ContractError("seed has " + std::to_string(s.size()) + " entries, table arity is " +
                            std::to_string(t.k()));
    }
    return state_index(s, t.m());
}

struct DefSeed {
    IterableMap<Scalar> map;
    State<Scalar> seed;
    std::size_t order;
};

DefSeed def_with_seed(const dsl::MapDefinition& def, const CommandConfig& c) {
    const auto parsed = dsl::parse_scalars(require(c.seed, "--seed", c));
    const std::size_t order = dsl::combine_orders(def.field_order, parsed.field_order);
    auto values = dsl::evaluate_scalars(parsed, order);
    if (values.size() != def.arity) {
        throw ContractError("seed has " + std::to_string(values.size()) + " entries, map arity is " +
                            std::to_string(def.arity));
    }
    return DefSeed{dsl::to_iterable_map(def, order), State<Scalar>(std::move(values)), order};
}

AffineMapSpec<Scalar> require_affine(const dsl::MapDefinition& def, const CommandConfig& c) {
    try {
        return dsl::to_affine(def, def.field_order);
    } catch (const ContractError& e) {
        throw ContractError(c.command + " needs a table or an affine definition (" + e.what() + ")");
    }
}

Integer parse_positive_integer(const std::string& text, const std::string& flag) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw ContractError(flag + " must be a positive integer, got '" + text + "'");
    }
    Integer v(text);
    if (v < 1) {
        throw ContractError(flag + " must be at least 1");
    }
    return v;
}

std::optional<std::string> integer_or_null(const std::optional<Integer>& v) {
    if (!v) {
        return std::nullopt;
    }
    return v->get_str();
}

json nullable(const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); }

json table_json(const FiniteTable& t) {
    return json{{"m", t.m()}, {"k", t.k()}, {"entries", t.entries()}};
}

json state_symbols_json(std::size_t idx, const FiniteTable& t) { return state_from_index(idx, t.m(), t.k()); }

// a^n == 1 for an element of Q(zeta_N). Roots of unity there have order dividing 2N,
// so n only matters modulo 2N.
bool power_is_one(const Scalar& a, const Integer& n) {
    const unsigned long period = 2 * a.order();
    const Scalar one = Scalar::one(a.order());
    if (a.is_zero() || a.pow(static_cast<long>(period)) != one) {
        return false;
    }
    const Integer r = n % period;
    return a.pow(static_cast<long>(r.get_ui())) == one;
}

// Induced map t -> a_j t + c with c ranging over every value the other arguments produce.
bool affine_induced_involutory(const AffineMapSpec<Scalar>& spec, const Integer& n, std::size_t j) {
    const Scalar& a = spec.coefficients[j - 1];
    const Scalar one = Scalar::one(a.order());
    if (a != one) {
        return power_is_one(a, n);
    }
    if (!spec.constant.is_zero()) {
        return false;
    }
    for (std::size_t i = 0; i < spec.arity(); ++i) {
        if (i != j - 1 && !spec.coefficients[i].is_zero()) {
            return false;
        }
    }
    return true;
}

Report cmd_iterate(const CommandConfig& c) {
    const long n = require(c.n, "--n", c);
    Input in = load_input(c);
    Report r;
    r.data["n"] = n;
    if (in.table) {
        const FiniteTable& t = *in.table;
        const std::size_t out = table_iterate(t, table_seed_index(t, c), n);
        const auto s = state_from_index(out, t.m(), t.k());
        r.text = symbols_text(s) + "\n";
        r.data["state"] = s;
        return r;
    }
    if (n < 0) {
        throw ContractError("negative --n is only supported for tables");
    }
    const DefSeed ds = def_with_seed(*in.def, c);
    State<Scalar> out = ds.seed;
    if (dsl::is_affine(*in.def)) {
        const auto it = build_first_iterate(dsl::to_affine(*in.def, ds.order));
        out = affine_iterate(it, ds.seed, static_cast<std::size_t>(n));
    } else {
        out = iterate(ds.map, ds.seed, static_cast<std::size_t>(n));
    }
    r.text = state_text(out) + "\n";
    r.data["state"] = state_json(out);
    return r;
}

Report cmd_orbit(const CommandConfig& c) {
    Input in = load_input(c);
    Report r;
    json states = json::array();
    bool recurred = false;
    std::size_t length = 0;
    if (in.table) {
        const FiniteTable& t = *in.table;
        const std::size_t start = table_seed_index(t, c);
        const auto o = orbit(t.as_map(), State<Symbol>(state_from_index(start, t.m(), t.k())), c.max_steps);
        for (const auto& s : o.states) {
            r.text += symbols_text(s.vector()) + "\n";
            states.push_back(s.vector());
        }
        recurred = o.recurred;
        length = o.states.size();
    } else {
        const DefSeed ds = def_with_seed(*in.def, c);
        const auto o = orbit(ds.map, ds.seed, c.max_steps);
        for (const auto& s : o.states) {
            r.text += state_text(s) + "\n";
            states.push_back(state_json(s));
        }
        recurred = o.recurred;
        length = o.states.size();
    }
    r.text += recurred ? "period " + std::to_string(length) + "\n"
                       : "no return within " + std::to_string(c.max_steps) + " steps\n";
    r.data["states"] = states;
    r.data["recurred"] = recurred;
    r.data["period"] = recurred ? json(length) : json(nullptr);
    return r;
}

Report cmd_order(const CommandConfig& c) {
    Input in = load_input(c);
    Report r;
    if (in.table) {
        const CycleReport cr = cycle_report(*in.table);
        const auto order = integer_or_null(cr.minimal_order);
        r.text = (order ? *order : std::string("none (first iterate is not bijective)")) + "\n";
        r.data["order"] = nullable(order);
        r.data["bijective"] = cr.bijective;
        r.data["exact"] = true;
        return r;
    }
    const auto spec = require_affine(*in.def, c);
    const auto order = affine_involutory_order(build_first_iterate(spec), c.bound);
    r.text = (order ? std::to_string(*order) : "none up to " + std::to_string(c.bound)) + "\n";
    r.data["order"] = order ? json(std::to_string(*order)) : json(nullptr);
    r.data["bound"] = c.bound;
    r.data["exact"] = false;
    return r;
}

Report cmd_point_order(const CommandConfig& c) {
    Input in = load_input(c);
    Report r;
    std::optional<std::size_t> order;
    if (in.table) {
        const FiniteTable& t = *in.table;
        const std::size_t s = table_seed_index(t, c);
        const CycleReport cr = cycle_report(t);
        if (auto it = cr.per_point_period.find(s); it != cr.per_point_period.end()) {
            order = it->second;
        }
        r.text = (order ? std::to_string(*order) : std::string("none (state is not on a cycle)")) + "\n";
    } else {
        const DefSeed ds = def_with_seed(*in.def, c);
        order = point_involutory_order(ds.map, ds.seed, c.bound);
        r.data["bound"] = c.bound;
        r.text = (order ? std::to_string(*order) : "none up to " + std::to_string(c.bound)) + "\n";
    }
    r.data["order"] = order ? json(*order) : json(nullptr);
    return r;
}

Report cmd_check_ii(const CommandConfig& c) {
    const Integer n = parse_positive_integer(require(c.ii_order, "--n", c), "--n");
    Input in = load_input(c);
    const std::size_t k = in.table ? in.table->k() : in.def->arity;
    if (c.arg && (*c.arg < 1 || *c.arg > k)) {
        throw ContractError("--arg must lie in 1.." + std::to_string(k));
    }
    bool holds = true;
    if (in.table) {
        holds = is_induced_involutory(*in.table, n, c.arg);
    } else {
        const auto spec = require_affine(*in.def, c);
        for (std::size_t j = 1; j <= k; ++j) {
            if (!c.arg || *c.arg == j) {
                holds = holds && affine_induced_involutory(spec, n, j);
            }
        }
    }
    Report r;
    r.text = holds ? "true\n" : "false\n";
    r.data["ii"] = holds;
    r.data["n"] = n.get_str();
    r.data["arg"] = c.arg ? json(*c.arg) : json(nullptr);
    return r;
}

Report cmd_symmetric(const CommandConfig& c) {
    Input in = load_input(c);
    Report r;
    bool symmetric = true;
    if (in.table) {
        symmetric = is_symmetric(*in.table);
        r.data["persymmetric"] = in.table->k() == 2 ? json(is_persymmetric(*in.table)) : json(nullptr);
    } else {
        const auto spec = require_affine(*in.def, c);
        for (const auto& a : spec.coefficients) {
            symmetric = symmetric && a == spec.coefficients.front();
        }
        r.data["persymmetric"] = nullptr;
    }
    r.text = symmetric ? "true\n" : "false\n";
    r.data["symmetric"] = symmetric;
    return r;
}

Report cmd_cycles(const CommandConfig& c) {
    const FiniteTable t = require_table(c);
    const CycleReport cr = cycle_report(t);
    Report r;
    const auto lengths = cr.cycle_lengths();
    const auto order = integer_or_null(cr.minimal_order);
    std::ostringstream text;
    text << "bijective " << (cr.bijective ? "true" : "false") << "\n";
    text << "lengths";
    for (auto len : lengths) {
        text << ' ' << len;
    }
    text << "\norder " << (order ? *order : std::string("none")) << "\n";
    json cycles = json::array();
    for (const auto& cycle : cr.cycles) {
        text << "cycle";
        json states = json::array();
        for (auto idx : cycle) {
            const auto s = state_from_index(idx, t.m(), t.k());
            text << " (" << symbols_text(s) << ")";
            states.push_back(s);
        }
        text << "\n";
        cycles.push_back(states);
    }
    r.text = text.str();
    r.data["bijective"] = cr.bijective;
    r.data["cycle_lengths"] = lengths;
    r.data["minimal_order"] = nullable(order);
    r.data["cycles"] = cycles;
    return r;
}

Report cmd_enumerate_ii(const CommandConfig& c) {
    require_no_input(c);
    const std::size_t m = require(c.m, "--m", c);
    const std::size_t k = require(c.k, "--k", c);
    Report r;
    json tables = json::array();
    std::size_t count = 0;
    for_each_ii_table(
        m, k,
        [&](const FiniteTable& t) {
            r.text += symbols_text(t.entries()) + "\n";
            tables.push_back(t.entries());
            ++count;
            return true;
        },
        c.max_states);
    r.text += "count " + std::to_string(count) + "\n";
    r.data["m"] = m;
    r.data["k"] = k;
    r.data["count"] = count;
    r.data["tables"] = tables;
    return r;
}

Report cmd_count_involutions(const CommandConfig& c) {
    require_no_input(c);
    const std::size_t m = require(c.m, "--m", c);
    const Integer count = count_involutions(m);
    Report r;
    r.text = count.get_str() + "\n";
    r.data["m"] = m;
    r.data["count"] = count.get_str();
    r.data["brute_force_checked"] = m <= kInvolutionCrossCheckLimit;
    return r;
}

Report cmd_claim1(const CommandConfig& c) {
    const FiniteTable t = require_table(c);
    const Claim1Report rep = claim1_report(t);
    Report r;
    const std::string total = std::to_string(rep.entries.size());
    r.text = "states " + total + "\n" + "period relation " + std::to_string(rep.period_relation_holds) + "/" + total +
             "\n" + "j | n " + std::to_string(rep.j_divides_n_holds) + "/" + total + "\n" + "j | nk " +
             std::to_string(rep.j_divides_nk_holds) + "/" + total + "\n";
    json entries = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back(json{{"state", state_symbols_json(e.state, t)},
                               {"state_period", e.state_period},
                               {"sequence_period", e.sequence_period},
                               {"period_relation", e.period_relation},
                               {"j_divides_n", e.j_divides_n},
                               {"j_divides_nk", e.j_divides_nk}});
    }
    r.data["k"] = rep.k;
    r.data["entries"] = entries;
    r.data["period_relation_holds"] = rep.period_relation_holds;
    r.data["j_divides_n_holds"] = rep.j_divides_n_holds;
    r.data["j_divides_nk_holds"] = rep.j_divides_nk_holds;
    if (!rep.all_period_relations() || !rep.all_j_divides_nk()) {
        r.exit_code = kExitVerificationFailed;
    }
    return r;
}

Report cmd_augment(const CommandConfig& c) {
    const std::size_t target = require(c.to, "--to", c);
    Input in = load_input(c);
    Report r;
    r.data["arity"] = target;
    if (in.table) {
        const FiniteTable& t = *in.table;
        const auto lifted = augment(t.as_map(), target);
        const FiniteTable out = FiniteTable::from_function(
            t.m(), target, [&lifted](std::span<const Symbol> x) { return lifted(x); }, c.max_states);
        r.text = write_table(out);
        r.data["table"] = table_json(out);
        return r;
    }
    const auto spec = require_affine(*in.def, c);
    const std::size_t order = in.def->field_order;
    const auto lifted = augment(spec.as_map(), target);
    // The lift of an affine map is affine; read its coefficients off the basis vectors.
    std::vector<Scalar> point(target, Scalar::zero(order));
    const Scalar constant = lifted(point);
    AffineMapSpec<Scalar> out{{}, constant};
    for (std::size_t i = 0; i < target; ++i) {
        point[i] = Scalar::one(order);
        out.coefficients.push_back(lifted(point) - constant);
        point[i] = Scalar::zero(order);
    }
    r.text = dsl::to_source(out) + "\n";
    r.data["definition"] = dsl::to_source(out);
    return r;
}

Report cmd_conjugate(const CommandConfig& c) {
    const FiniteTable t = require_table(c);
    const auto g = parse_symbols(require(c.perm, "--perm", c), t.m());
    if (g.size() != t.m()) {
        throw ContractError("--perm needs " + std::to_string(t.m()) + " entries");
    }
    const FiniteTable out = conjugate(t, g);
    Report r;
    r.text = write_table(out);
    r.data["table"] = table_json(out);
    r.data["minimal_order"] = nullable(integer_or_null(cycle_report(out).minimal_order));
    return r;
}

Report cmd_verify_examples(const CommandConfig& c) {
    require_no_input(c);
    Report r;
    json checks = json::array();
    bool all = true;
    for (const auto& check : verify_examples()) {
        r.text += std::string(check.passed ? "PASS " : "FAIL ") + check.name;
        if (!check.detail.empty()) {
            r.text += ": " + check.detail;
        }
        r.text += "\n";
        checks.push_back(json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        all = all && check.passed;
    }
    r.data["checks"] = checks;
    r.data["passed"] = all;
    if (!all) {
        r.exit_code = kExitVerificationFailed;
    }
    return r;
}

using Handler = Report (*)(const CommandConfig&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
    static const std::vector<std::pair<std::string, Handler>> table = {
        {"iterate", cmd_iterate},
        {"orbit", cmd_orbit},
        {"order", cmd_order},
        {"point-order", cmd_point_order},
        {"check-ii", cmd_check_ii},
        {"symmetric", cmd_symmetric},
        {"cycles", cmd_cycles},
        {"enumerate-ii", cmd_enumerate_ii},
        {"count-involutions", cmd_count_involutions},
        {"claim1", cmd_claim1},
        {"augment", cmd_augment},
        {"conjugate", cmd_conjugate},
        {"verify-examples", cmd_verify_examples},
    };
    return table;
}

CommandResult failure(int code, const std::string& message) { return CommandResult{code, "", "error: " + message + "\n"}; }

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, handler] : handlers()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

CommandResult run(const CommandConfig& config) {
    const auto& table = handlers();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& h) { return h.first == config.command; });
    if (it == table.end()) {
        return failure(kExitUsage, "unknown command '" + config.command + "'");
    }
    try {
        Report r = it->second(config);
        CommandResult out;
        out.exit_code = r.exit_code;
        if (config.json) {
            r.data["command"] = config.command;
            out.out = r.data.dump(2) + "\n";
        } else {
            out.out = std::move(r.text);
        }
        if (r.exit_code == kExitVerificationFailed) {
            out.err = "error: verification failed\n";
        }
        return out;
    } catch (const ParseError& e) {
        return failure(kExitUsage, std::string("parse error at ") + e.what());
    } catch (const ContractError& e) {
        return failure(kExitUsage, e.what());
    } catch (const ArithmeticError& e) {
        return failure(kExitUsage, e.what());
    } catch (const ResourceError& e) {
        return failure(kExitResource, e.what());
    } catch (const std::bad_alloc&) {
        return failure(kExitResource, "out of memory");
    } catch (const std::exception& e) {
        return failure(kExitVerificationFailed, std::string("internal check failed: ") + e.what());
    }
}

}  // namespace babbage::cli
