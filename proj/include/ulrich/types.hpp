#pragma once

#include <cstdint>

#include <boost/rational.hpp>

namespace ulrich {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

/// Binomial coefficient, zero outside 0 <= k <= n.
constexpr Int binomial(Int n, Int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    Int r = 1;
    for (Int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace ulrich
