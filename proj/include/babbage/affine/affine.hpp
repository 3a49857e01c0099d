/**
 * @file affine.hpp
 * @brief Affine maps f(x) = a_1 x_1 + ... + a_k x_k + A and their first iterates.
 *
 * For affine f the first iterate is itself affine, x -> M x + b. Row j of
 * (M, b) comes from substituting the rows already built for the fed-back
 * components, so every step is exact over the scalar field. Iterates are
 * powers of the homogeneous (k+1)x(k+1) matrix [[M, b], [0, 1]].
 *
 * Scalars are Rational or CyclotomicNumber; zero_like/one_like supply the
 * additive and multiplicative identities of the field a sample value lives in.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "babbage/core/engine.hpp"
#include "babbage/errors.hpp"
#include "babbage/exact/cyclotomic.hpp"
#include "babbage/exact/rational.hpp"

namespace babbage {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline CyclotomicNumber zero_like(const CyclotomicNumber& c) { return CyclotomicNumber::zero(c.order()); }
inline CyclotomicNumber one_like(const CyclotomicNumber& c) { return CyclotomicNumber::one(c.order()); }

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
struct AffineMapSpec {
    std::vector<S> coefficients;  ///< a_1..a_k
    S constant;                   ///< A

    std::size_t arity() const { return coefficients.size(); }

    S evaluate(std::span<const S> x) const {
        if (x.size() != coefficients.size()) {
            throw ContractError("affine map of arity " + std::to_string(arity()) + " applied to " +
                                std::to_string(x.size()) + " arguments");
        }
        S acc = constant;
        for (std::size_t i = 0; i < x.size(); ++i) {
            acc += coefficients[i] * x[i];
        }
        return acc;
    }

    IterableMap<S> as_map() const {
        if (coefficients.empty()) {
            throw ContractError("affine map needs at least one coefficient");
        }
        return IterableMap<S>(arity(), [spec = *this](std::span<const S> x) { return spec.evaluate(x); });
    }
};

template <class S>
struct AffineFirstIterate {
    Matrix<S> matrix;       ///< k x k
    std::vector<S> offset;  ///< length k

    std::size_t dimension() const { return offset.size(); }

    State<S> apply(const State<S>& s) const {
        if (s.arity() != dimension()) {
            throw ContractError("state of arity " + std::to_string(s.arity()) + " for an affine iterate of dimension " +
                                std::to_string(dimension()));
        }
        std::vector<S> out = offset;
        for (std::size_t r = 0; r < dimension(); ++r) {
            for (std::size_t c = 0; c < dimension(); ++c) {
                out[r] += matrix[r][c] * s[c];
            }
        }
        return State<S>(std::move(out));
    }
};

namespace detail {

// Affine form sum_c coeffs[c] x_c + constant.
template <class S>
struct AffineForm {
    std::vector<S> coeffs;
    S constant;
};

template <class S>
Matrix<S> identity_matrix(std::size_t n, const S& sample) {
    Matrix<S> out(n, std::vector<S>(n, zero_like(sample)));
    for (std::size_t i = 0; i < n; ++i) {
        out[i][i] = one_like(sample);
    }
    return out;
}

template <class S>
Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) {
    const std::size_t n = a.size();
    const S zero = zero_like(a[0][0]);
    Matrix<S> out(n, std::vector<S>(n, zero));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            if (a[i][l] == zero) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

template <class S>
Matrix<S> homogeneous(const AffineFirstIterate<S>& it) {
    const std::size_t k = it.dimension();
    const S& sample = it.offset.front();
    Matrix<S> h(k + 1, std::vector<S>(k + 1, zero_like(sample)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            h[r][c] = it.matrix[r][c];
        }
        h[r][k] = it.offset[r];
    }
    h[k][k] = one_like(sample);
    return h;
}

template <class S>
AffineFirstIterate<S> from_homogeneous(const Matrix<S>& h) {
    const std::size_t k = h.size() - 1;
    AffineFirstIterate<S> it;
    it.matrix.assign(k, {});
    for (std::size_t r = 0; r < k; ++r) {
        it.matrix[r].assign(h[r].begin(), h[r].begin() + static_cast<std::ptrdiff_t>(k));
        it.offset.push_back(h[r][k]);
    }
    return it;
}

}  // namespace detail

template <class S>
AffineFirstIterate<S> build_first_iterate(const AffineMapSpec<S>& spec) {
    const std::size_t k = spec.arity();
    if (k == 0) {
        throw ContractError("affine map needs at least one coefficient");
    }
    const S zero = zero_like(spec.constant);
    const S one = one_like(spec.constant);
    // Window of affine forms: x_1..x_k, then each produced component.
    std::vector<detail::AffineForm<S>> seq;
    seq.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        detail::AffineForm<S> unit{std::vector<S>(k, zero), zero};
        unit.coeffs[i] = one;
        seq.push_back(std::move(unit));
    }
    for (std::size_t j = 0; j < k; ++j) {
        detail::AffineForm<S> next{std::vector<S>(k, zero), spec.constant};
        for (std::size_t i = 0; i < k; ++i) {
            const auto& arg = seq[j + i];
            for (std::size_t c = 0; c < k; ++c) {
                next.coeffs[c] += spec.coefficients[i] * arg.coeffs[c];
            }
            next.constant += spec.coefficients[i] * arg.constant;
        }
        seq.push_back(std::move(next));
    }
    AffineFirstIterate<S> out;
    for (std::size_t j = 0; j < k; ++j) {
        out.matrix.push_back(seq[k + j].coeffs);
        out.offset.push_back(seq[k + j].constant);
    }
    return out;
}

/// (M, b)^n by square-and-multiply on the homogeneous form.
template <class S>
AffineFirstIterate<S> affine_power(const AffineFirstIterate<S>& it, std::size_t n) {
    Matrix<S> base = detail::homogeneous(it);
    Matrix<S> acc = detail::identity_matrix(base.size(), it.offset.front());
    while (n > 0) {
        if (n & 1U) {
            acc = detail::multiply(acc, base);
        }
        n >>= 1U;
        if (n > 0) {
            base = detail::multiply(base, base);
        }
    }
    return detail::from_homogeneous(acc);
}

template <class S>
State<S> affine_iterate(const AffineFirstIterate<S>& it, const State<S>& s, std::size_t n) {
    if (s.arity() != it.dimension()) {
        throw ContractError("state of arity " + std::to_string(s.arity()) + " for an affine iterate of dimension " +
                            std::to_string(it.dimension()));
    }
    if (n == 0) {
        return s;
    }
    return affine_power(it, n).apply(s);
}

/// Least n <= bound with M^n = I and zero accumulated offset.
template <class S>
std::optional<std::size_t> affine_involutory_order(const AffineFirstIterate<S>& it, std::size_t bound) {
    if (bound == 0) {
        throw ContractError("affine_involutory_order needs bound >= 1");
    }
    const Matrix<S> step = detail::homogeneous(it);
    const Matrix<S> id = detail::identity_matrix(step.size(), it.offset.front());
    Matrix<S> acc = step;
    for (std::size_t n = 1; n <= bound; ++n) {
        if (acc == id) {
            return n;
        }
        acc = detail::multiply(acc, step);
    }
    return std::nullopt;
}

}  // namespace babbage
