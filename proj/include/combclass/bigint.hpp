#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace combclass {

// Exact arbitrary-precision integer used for all object counts.
using Bigint = boost::multiprecision::cpp_int;

inline Bigint factorial(unsigned n)
{
    Bigint r = 1;
    for (unsigned i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// binomial(n, k) via the multiplicative recurrence; every intermediate
// division is exact.
inline Bigint binomial(unsigned n, unsigned k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Bigint r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Bigint int_pow(const Bigint &base, unsigned exp)
{
    Bigint r = 1, b = base;
    while (exp) {
        if (exp & 1u)
            r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline std::string to_decimal(const Bigint &x) { return x.str(); }

inline Bigint bigint_from_decimal(const std::string &s)
{
    if (s.empty())
        throw std::invalid_argument("empty decimal string");
    return Bigint(s);
}

} // namespace combclass
