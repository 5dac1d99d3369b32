#pragma once

#include <cstdint>

#include "pfrob/error.hpp"

namespace pfrob {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "integer overflow in multiplication");
    return r;
}

// gcd over non-negative magnitudes; gcd(0, 0) == 0.
inline Int gcd_abs(Int a, Int b) {
    if (a < 0) a = checked_sub(0, a);
    if (b < 0) b = checked_sub(0, b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

} // namespace pfrob
