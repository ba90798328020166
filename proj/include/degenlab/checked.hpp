#pragma once

#include <cstdint>

#include "degenlab/error.hpp"

namespace degenlab {

// Every count in the library is an exact signed integer of this width.
using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer addition overflow");
    }
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer subtraction overflow");
    }
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw Error(ErrorKind::Overflow, "integer multiplication overflow");
    }
    return r;
}

// n(n-1)/2; one of n, n-1 is even so the division is exact.
inline Int choose2(Int n) {
    return (n % 2 == 0) ? mul(n / 2, n - 1) : mul(n, (n - 1) / 2);
}

inline Int choose3(Int n) {
    // n(n-1)(n-2)/6 without forming the full product first.
    Int a = n, b = n - 1, c = n - 2;
    if (a % 2 == 0) a /= 2; else b /= 2;
    if (a % 3 == 0) a /= 3; else if (b % 3 == 0) b /= 3; else c /= 3;
    return mul(mul(a, b), c);
}

}  // namespace checked
}  // namespace degenlab
