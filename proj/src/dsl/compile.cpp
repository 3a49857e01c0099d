#include "babbage/dsl/compile.hpp"

#include <numeric>
#include <type_traits>

#include "babbage/errors.hpp"

namespace babbage::dsl {

namespace {

void require_field(const Expr& e, std::size_t order) {
    const std::size_t needed = field_order(e);
    if (order == 0 || order % needed != 0) {
        throw ContractError("expression needs Q(zeta_" + std::to_string(needed) + "), which does not embed in Q(zeta_" +
                            std::to_string(order) + ")");
    }
}

Scalar root(const RootOfUnity& r, std::size_t order) {
    const long step = static_cast<long>(order / r.order);
    const long exponent = static_cast<long>(r.power % r.order) * step;
    return Scalar::zeta(order, exponent);
}

Scalar eval(const Expr& e, std::span<const Scalar> vars, std::size_t order) {
    return std::visit(
        [&](const auto& n) -> Scalar {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Variable>) {
                if (n.index < 1 || n.index > vars.size()) {
                    throw ContractError("variable x" + std::to_string(n.index) + " out of range");
                }
                return vars[n.index - 1];
            } else if constexpr (std::is_same_v<T, Literal>) {
                return Scalar(order, n.value);
            } else if constexpr (std::is_same_v<T, RootOfUnity>) {
                return root(n, order);
            } else if constexpr (std::is_same_v<T, Negate>) {
                return -eval(*n.operand, vars, order);
            } else if constexpr (std::is_same_v<T, Binary>) {
                Scalar lhs = eval(*n.lhs, vars, order);
                const Scalar rhs = eval(*n.rhs, vars, order);
                switch (n.op) {
                    case BinaryOp::add:
                        return lhs += rhs;
                    case BinaryOp::subtract:
                        return lhs -= rhs;
                    case BinaryOp::multiply:
                        return lhs *= rhs;
                }
                throw ContractError("unknown operator");
            } else {
                return eval(*n.inner, vars, order);
            }
        },
        e.node);
}

struct LinearForm {
    std::vector<Scalar> coeffs;
    Scalar constant;

    bool is_constant() const {
        for (const auto& c : coeffs) {
            if (!c.is_zero()) {
                return false;
            }
        }
        return true;
    }

    LinearForm& scale(const Scalar& s) {
        for (auto& c : coeffs) {
            c *= s;
        }
        constant *= s;
        return *this;
    }
};

LinearForm fold(const Expr& e, std::size_t arity, std::size_t order) {
    return std::visit(
        [&](const auto& n) -> LinearForm {
            using T = std::decay_t<decltype(n)>;
            LinearForm out{std::vector<Scalar>(arity, Scalar::zero(order)), Scalar::zero(order)};
            if constexpr (std::is_same_v<T, Variable>) {
                if (n.index < 1 || n.index > arity) {
                    throw ContractError("variable x" + std::to_string(n.index) + " out of range");
                }
                out.coeffs[n.index - 1] = Scalar::one(order);
            } else if constexpr (std::is_same_v<T, Literal>) {
                out.constant = Scalar(order, n.value);
            } else if constexpr (std::is_same_v<T, RootOfUnity>) {
                out.constant = root(n, order);
            } else if constexpr (std::is_same_v<T, Negate>) {
                out = fold(*n.operand, arity, order);
                out.scale(Scalar(order, Rational(-1)));
            } else if constexpr (std::is_same_v<T, Binary>) {
                LinearForm lhs = fold(*n.lhs, arity, order);
                LinearForm rhs = fold(*n.rhs, arity, order);
                if (n.op == BinaryOp::multiply) {
                    if (lhs.is_constant()) {
                        return rhs.scale(lhs.constant);
                    }
                    if (rhs.is_constant()) {
                        return lhs.scale(rhs.constant);
                    }
                    throw ContractError("definition is not affine: product of two non-constant terms at " +
                                        std::to_string(e.pos.line) + ":" + std::to_string(e.pos.column));
                }
                if (n.op == BinaryOp::subtract) {
                    rhs.scale(Scalar(order, Rational(-1)));
                }
                for (std::size_t i = 0; i < arity; ++i) {
                    lhs.coeffs[i] += rhs.coeffs[i];
                }
                lhs.constant += rhs.constant;
                return lhs;
            } else {
                return fold(*n.inner, arity, order);
            }
            return out;
        },
        e.node);
}

// Appends " + term" or " - term" depending on the sign the term text starts with.
void append_signed(std::string& out, const std::string& term) {
    if (out.empty()) {
        out = term;
    } else if (term.starts_with('-')) {
        out += " - " + term.substr(1);
    } else {
        out += " + " + term;
    }
}

}  // namespace

Scalar evaluate(const Expr& e, std::span<const Scalar> vars, std::size_t order) {
    require_field(e, order);
    for (const auto& v : vars) {
        if (v.order() != order) {
            throw ContractError("argument in Q(zeta_" + std::to_string(v.order()) + ") for a map over Q(zeta_" +
                                std::to_string(order) + ")");
        }
    }
    return eval(e, vars, order);
}

IterableMap<Scalar> to_iterable_map(const MapDefinition& def, std::size_t order) {
    require_field(*def.body, order);
    return IterableMap<Scalar>(def.arity,
                               [body = def.body, order](std::span<const Scalar> x) { return evaluate(*body, x, order); });
}

AffineMapSpec<Scalar> to_affine(const MapDefinition& def, std::size_t order) {
    require_field(*def.body, order);
    LinearForm lf = fold(*def.body, def.arity, order);
    return AffineMapSpec<Scalar>{std::move(lf.coeffs), std::move(lf.constant)};
}

bool is_affine(const MapDefinition& def) {
    try {
        to_affine(def, def.field_order);
        return true;
    } catch (const ContractError&) {
        return false;
    }
}

std::size_t combine_orders(std::size_t a, std::size_t b) {
    const std::size_t order = std::lcm(a, b);
    if (order > kMaxCyclotomicOrder) {
        throw ContractError("combined root-of-unity order " + std::to_string(order) + " exceeds " +
                            std::to_string(kMaxCyclotomicOrder));
    }
    return order;
}

ParsedScalars parse_scalars(std::string_view text) {
    ParsedScalars out;
    out.exprs = parse_scalar_list(text);
    for (const auto& e : out.exprs) {
        out.field_order = combine_orders(out.field_order, field_order(*e));
    }
    return out;
}

std::vector<Scalar> evaluate_scalars(const ParsedScalars& p, std::size_t order) {
    std::vector<Scalar> out;
    out.reserve(p.exprs.size());
    for (const auto& e : p.exprs) {
        out.push_back(evaluate(*e, {}, order));
    }
    return out;
}

std::string to_source(const Scalar& c) {
    const auto& coeffs = c.coefficients();
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const Rational& q = coeffs[i];
        if (q.is_zero()) {
            continue;
        }
        if (i == 0) {
            append_signed(out, q.to_string());
            continue;
        }
        std::string term = "zeta(" + std::to_string(c.order()) + ")";
        if (i > 1) {
            term += "^" + std::to_string(i);
        }
        if (q == Rational(-1)) {
            term = "-" + term;
        } else if (q != Rational(1)) {
            term = q.to_string() + "*" + term;
        }
        append_signed(out, term);
    }
    return out.empty() ? "0" : out;
}

std::string to_source(const AffineMapSpec<Scalar>& spec) {
    std::string params;
    std::string body;
    for (std::size_t i = 0; i < spec.arity(); ++i) {
        const std::string var = "x" + std::to_string(i + 1);
        params += (i > 0 ? ", " : "") + var;
        const Scalar& a = spec.coefficients[i];
        if (a.is_zero()) {
            continue;
        }
        std::string coeff = to_source(a);
        if (coeff == "1" || coeff == "-1") {
            coeff.pop_back();
            append_signed(body, coeff + var);
            continue;
        }
        if (coeff.find(' ') != std::string::npos) {
            coeff = "(" + coeff + ")";
        }
        append_signed(body, coeff + "*" + var);
    }
    if (!spec.constant.is_zero() || body.empty()) {
        std::string constant = to_source(spec.constant);
        if (constant.find(' ') != std::string::npos) {
            constant = "(" + constant + ")";
        }
        append_signed(body, constant);
    }
    return "f(" + params + ") = " + body;
}

}  // namespace babbage::dsl
