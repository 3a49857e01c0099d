#pragma once

#include <cstddef>

#include "babbage/exact/rational.hpp"

namespace babbage {

/// F_n with F_0 = 0, F_1 = 1, by iterated addition.
Integer fibonacci(std::size_t n);

/// Extension to negative indices, F_{-n} = (-1)^{n+1} F_n (so F_{-1} = 1).
Integer fibonacci_signed(long n);

}  // namespace babbage
