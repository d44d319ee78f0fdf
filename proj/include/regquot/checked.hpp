#pragma once

// Overflow-checked integer helpers.

#include <cstdint>
#include <string>

#include "regquot/error.hpp"

namespace regquot {

template <typename T>
T checked_add(T a, T b) {
    T out;
    if (__builtin_add_overflow(a, b, &out)) throw Overflow("integer overflow in addition");
    return out;
}

template <typename T>
T checked_mul(T a, T b) {
    T out;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow("integer overflow in multiplication");
    return out;
}

/// C(n, k) with C(n, k) = 0 for k < 0, k > n or n < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace regquot
