#pragma once

#include <cstdint>
#include <numeric>

namespace tamejl::arith {

__extension__ using int128 = __int128;

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m)
{
    const int128 p = static_cast<int128>(floor_mod(a, m)) * floor_mod(b, m);
    return static_cast<std::int64_t>(p % m);
}

inline std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m)
{
    if (m == 1) return 0;
    std::int64_t result = 1;
    std::int64_t b = floor_mod(base, m);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, m);
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    return result;
}

/// base^exp, or -1 if the result exceeds `limit`.
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp, std::int64_t limit)
{
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (result > limit / base) return -1;
        result *= base;
    }
    return result;
}

/// Smallest prime factor of n >= 2.
inline std::int64_t smallest_prime_factor(std::int64_t n)
{
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) return p;
    }
    return n;
}

/// True iff n = p^k for a prime p and k >= 1.
inline bool is_prime_power(std::int64_t n)
{
    if (n < 2) return false;
    const std::int64_t p = smallest_prime_factor(n);
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace tamejl::arith
