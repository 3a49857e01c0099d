#include "babbage/affine/decreasing_involution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "babbage/errors.hpp"

namespace babbage {

namespace {

void require_positive(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw ContractError("decreasing involution is defined on x > 0 only, got " + std::to_string(x));
    }
}

}  // namespace

// (e^x + 1)/(e^x - 1) = 1 + 2/(e^x - 1); expm1/log1p keep both tails accurate.
double decreasing_involution(double x) {
    require_positive(x);
    return std::log1p(2.0 / std::expm1(x));
}

double negation_conjugator(double x) {
    require_positive(x);
    return std::log2(std::expm1(x)) - 0.5;
}

double decreasing_involution_fixed_point(double lo, double hi) {
    require_positive(lo);
    require_positive(hi);
    auto gap = [](double x) { return decreasing_involution(x) - x; };
    double glo = gap(lo);
    if (glo * gap(hi) > 0.0) {
        throw ContractError("h(x) - x does not change sign on the bracket");
    }
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double gm = gap(mid);
        if ((gm > 0.0) == (glo > 0.0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

ResidualSummary decreasing_involution_residuals(std::size_t sample_count, double lo, double hi) {
    require_positive(lo);
    require_positive(hi);
    if (!(lo < hi)) {
        throw ContractError("decreasing_involution_residuals needs lo < hi");
    }
    if (sample_count == 0) {
        throw ContractError("decreasing_involution_residuals needs at least one sample");
    }
    ResidualSummary out;
    out.samples = sample_count;
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);
    for (std::size_t i = 0; i < sample_count; ++i) {
        const double t = sample_count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(sample_count - 1);
        const double x = std::exp(log_lo + t * (log_hi - log_lo));
        const double hx = decreasing_involution(x);
        out.max_involution_residual = std::max(out.max_involution_residual, std::abs(decreasing_involution(hx) - x));
        out.max_conjugacy_residual =
            std::max(out.max_conjugacy_residual, std::abs(negation_conjugator(hx) + negation_conjugator(x)));
    }
    out.fixed_point = decreasing_involution_fixed_point();
    out.fixed_point_residual = std::abs(decreasing_involution(out.fixed_point) - out.fixed_point);
    return out;
}

}  // namespace babbage
