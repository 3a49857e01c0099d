#include "babbage/exact/fibonacci.hpp"

namespace babbage {

Integer fibonacci(std::size_t n) {
    Integer a = 0;
    Integer b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

Integer fibonacci_signed(long n) {
    if (n >= 0) {
        return fibonacci(static_cast<std::size_t>(n));
    }
    const auto m = static_cast<std::size_t>(-n);
    Integer f = fibonacci(m);
    return m % 2 == 0 ? Integer(-f) : f;
}

}  // namespace babbage
