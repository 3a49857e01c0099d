#pragma once

#include <cstddef>

namespace babbage {

/// h(x) = ln((e^x + 1)/(e^x - 1)) on x > 0, a strictly decreasing involution.
double decreasing_involution(double x);

/// g(x) = log2(e^x - 1) - 1/2, the map that conjugates h to -id: g(h(x)) = -g(x).
double negation_conjugator(double x);

struct ResidualSummary {
    std::size_t samples = 0;
    double max_involution_residual = 0.0;   ///< max |h(h(x)) - x|
    double max_conjugacy_residual = 0.0;    ///< max |g(h(x)) + g(x)|
    double fixed_point = 0.0;               ///< x* with h(x*) = x*, by bisection
    double fixed_point_residual = 0.0;      ///< |h(x*) - x*|
};

/// Residuals over `sample_count` log-spaced points of [lo, hi]. Requires 0 < lo < hi.
ResidualSummary decreasing_involution_residuals(std::size_t sample_count, double lo, double hi);

/// Root of h(x) - x on [lo, hi] by bisection; h(x) - x must change sign there.
double decreasing_involution_fixed_point(double lo = 0.01, double hi = 20.0);

}  // namespace babbage
