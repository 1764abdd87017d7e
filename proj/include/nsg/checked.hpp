#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "nsg/error.hpp"

namespace nsg {

using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw overflow_error("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw overflow_error("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw overflow_error("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

template <typename... Ts>
i64 checked_mul(i64 a, i64 b, Ts... rest) {
    return checked_mul(checked_mul(a, b), rest...);
}

// Exact division; throws `invariant_violation` carrying `what` if den does not divide num.
inline i64 exact_div(i64 num, i64 den, const char* what) {
    if (den == 0 || num % den != 0)
        throw invariant_violation(std::string(what) + ": " + std::to_string(num) +
                                  " is not divisible by " + std::to_string(den));
    return num / den;
}

// Floor division for a possibly negative numerator and positive denominator.
inline i64 floor_div(i64 num, i64 den) {
    i64 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

// Nonnegative residue of x modulo m > 0.
inline i64 mod_floor(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

// Inverse of a modulo m in [0, m), requiring gcd(a, m) = 1 and m >= 2.
inline i64 mod_inverse(i64 a, i64 m) {
    i64 old_r = mod_floor(a, m), r = m;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw precondition_error(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
    return mod_floor(old_s, m);
}

} // namespace nsg
