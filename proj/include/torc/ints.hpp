#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace torc {

// All exact arithmetic in the library runs over arbitrary-precision integers;
// rationals appear only in field-coefficient linear algebra.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coefficient ring tag shared by chain complexes and linear algebra.
enum class Coeff { Z, Q, Z2 };

inline const char* coeff_name(Coeff c) {
    switch (c) {
        case Coeff::Z: return "Z";
        case Coeff::Q: return "Q";
        case Coeff::Z2: return "Z2";
    }
    return "?";
}

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Binomial coefficient; 0 outside the usual range (n < 0 or k < 0 or k > n).
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline Int pow2(long long e) {
    return Int(1) << static_cast<unsigned>(e);
}

inline Int ipow(Int base, int e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

}  // namespace torc
