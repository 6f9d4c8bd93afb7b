#pragma once

#include <cstdint>
#include <numeric>
#include <span>

#include "ddsx/errors.hpp"

namespace ddsx {

using u64 = std::uint64_t;

// Multiplicities, periods and counters use 64-bit integers with checked
// arithmetic: any overflow raises arithmetic_overflow_error instead of
// wrapping. Multinomial coefficients are computed exactly.

inline u64 checked_add(u64 a, u64 b) {
    u64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer addition overflow");
    return r;
}

inline u64 checked_mul(u64 a, u64 b) {
    u64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw arithmetic_overflow_error("integer multiplication overflow");
    return r;
}

// lcm of positive integers, overflow-checked.
inline u64 checked_lcm(u64 a, u64 b) {
    const u64 g = std::gcd(a, b);
    return checked_mul(a / g, b);
}

// base^exp, overflow-checked. 0^0 = 1.
inline u64 checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

// Exact binomial coefficient. Intermediate products use 128-bit arithmetic;
// every value that escapes must fit in 64 bits.
inline u64 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;  // exact: r is C(n-k+i, i) after this step
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw arithmetic_overflow_error("binomial coefficient overflow");
    }
    return static_cast<u64>(r);
}

// Exact multinomial coefficient n! / (k_1! ... k_m!) with sum(k) == n.
inline u64 multinomial(u64 n, std::span<const u64> parts) {
    u64 r = 1;
    u64 consumed = 0;
    for (u64 k : parts) {
        consumed = checked_add(consumed, k);
        r = checked_mul(r, binomial(consumed, k));
    }
    if (consumed != n)
        throw arithmetic_overflow_error("multinomial parts do not sum to n");
    return r;
}

}  // namespace ddsx
