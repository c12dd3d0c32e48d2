#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace indpoly {

// Exact coefficient arithmetic everywhere; there is no overflow path.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(a, b) by the multiplicative formula; every intermediate division is exact.
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt c = 1;
    for (long long i = 1; i <= b; ++i) {
        c *= a - b + i;
        c /= i;
    }
    return c;
}

}  // namespace indpoly
