#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qba {

// Exact scalars. All coefficient arithmetic in the pipeline is rational;
// path counts in growth analysis need arbitrary-precision integers.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (long i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace qba
