#include "babbage/dsl/ast.hpp"

#include <numeric>
#include <type_traits>

namespace babbage::dsl {

namespace {

const char* op_text(BinaryOp op) {
    switch (op) {
        case BinaryOp::add:
            return " + ";
        case BinaryOp::subtract:
            return " - ";
        case BinaryOp::multiply:
            return " * ";
    }
    return " ? ";
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.node.index() != b.node.index()) {
        return false;
    }
    return std::visit(
        [&b](const auto& lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            const auto& rhs = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, Variable>) {
                return lhs.index == rhs.index;
            } else if constexpr (std::is_same_v<T, Literal>) {
                return lhs.value == rhs.value;
            } else if constexpr (std::is_same_v<T, RootOfUnity>) {
                return lhs.order == rhs.order && lhs.power == rhs.power;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return structurally_equal(*lhs.operand, *rhs.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                       structurally_equal(*lhs.rhs, *rhs.rhs);
            } else {
                return structurally_equal(*lhs.inner, *rhs.inner);
            }
        },
        a.node);
}

std::string render(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Variable>) {
                return "x" + std::to_string(n.index);
            } else if constexpr (std::is_same_v<T, Literal>) {
                return n.value.to_string();
            } else if constexpr (std::is_same_v<T, RootOfUnity>) {
                std::string out = "zeta(" + std::to_string(n.order) + ")";
                if (n.power != 1) {
                    out += "^" + std::to_string(n.power);
                }
                return out;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return "-" + render(*n.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return render(*n.lhs) + op_text(n.op) + render(*n.rhs);
            } else {
                return "(" + render(*n.inner) + ")";
            }
        },
        e.node);
}

std::size_t max_variable(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Variable>) {
                return n.index;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return max_variable(*n.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return std::max(max_variable(*n.lhs), max_variable(*n.rhs));
            } else if constexpr (std::is_same_v<T, Group>) {
                return max_variable(*n.inner);
            } else {
                return 0;
            }
        },
        e.node);
}

std::size_t field_order(const Expr& e) {
    return std::visit(
        [](const auto& n) -> std::size_t {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, RootOfUnity>) {
                return n.order;
            } else if constexpr (std::is_same_v<T, Negate>) {
                return field_order(*n.operand);
            } else if constexpr (std::is_same_v<T, Binary>) {
                return std::lcm(field_order(*n.lhs), field_order(*n.rhs));
            } else if constexpr (std::is_same_v<T, Group>) {
                return field_order(*n.inner);
            } else {
                return 1;
            }
        },
        e.node);
}

}  // namespace babbage::dsl
