#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "manin/errors.hpp"

namespace manin {

// All lattice coordinates are 64-bit integers; every arithmetic operation on
// them goes through these helpers so an overflow throws instead of wrapping.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer overflow in multiplication");
    return r;
}

inline Int checked_neg(Int a) {
    return checked_sub(0, a);
}

inline Int gcd_int(Int a, Int b) {
    if (a < 0) a = checked_neg(a);
    if (b < 0) b = checked_neg(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline Int gcd_vector(const std::vector<Int>& v) {
    Int g = 0;
    for (Int x : v) g = gcd_int(g, x);
    return g;
}

// Divide out the content; the zero vector is left untouched.
inline void make_primitive(std::vector<Int>& v) {
    Int g = gcd_vector(v);
    if (g > 1)
        for (Int& x : v) x /= g;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

} // namespace manin
