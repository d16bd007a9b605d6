#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

#include "qalpha/errors.hpp"

namespace qalpha {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    BigInt r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Ordinary binomial coefficient; zero outside 0 <= k <= n (n >= 0).
inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline BigRational rational_pow(const BigRational& x, long e) {
    if (e == 0) return BigRational(1);
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    BigRational acc = 1, base = x;
    while (n != 0) {
        if (n & 1ul) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (inv) {
        if (acc == 0) throw domain_error("inverse of zero");
        acc = BigRational(1) / acc;
    }
    return acc;
}

}  // namespace qalpha
