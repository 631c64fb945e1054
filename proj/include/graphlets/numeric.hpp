#pragma once

#include <cstdint>
#include <stdexcept>

namespace graphlets {

struct CountOverflow : std::overflow_error {
    CountOverflow() : std::overflow_error("graphlet count overflow") {}
};

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw CountOverflow();
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow();
    return r;
}

inline int64_t binom(int64_t n, int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    int64_t r = 1;
    for (int64_t i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

}  // namespace graphlets
