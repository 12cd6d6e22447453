#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ulrich/types.hpp"

namespace ulrich {

inline constexpr Int kUnbounded = std::numeric_limits<Int>::max() / 4;

/// Closed integer interval [lo, hi] of non-negative dimensions.
struct Interval {
    Int lo = 0;
    Int hi = 0;

    static constexpr Interval exactly(Int v) { return {v, v}; }
    static constexpr Interval unknown() { return {0, kUnbounded}; }

    bool is_exact() const { return lo == hi; }
    bool contains(Int v) const { return lo <= v && v <= hi; }
    bool is_zero() const { return lo == 0 && hi == 0; }
    /// Throws Indeterminate unless the interval is a single value.
    Int value() const;

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);
std::string to_string(const Interval& iv);

/// Cohomology dimensions h^0..h^N of one sheaf, each exact or an interval,
/// together with the exact Euler characteristic.
struct CohomTable {
    std::vector<Interval> h;
    Int chi = 0;

    static CohomTable zero(int top_degree);
    static CohomTable from_values(const std::vector<Int>& values);

    int top_degree() const { return static_cast<int>(h.size()) - 1; }
    bool is_exact() const;
    bool is_zero() const;
    /// h^i, zero outside 0..top_degree.
    Interval at(int i) const;
    /// All dimensions; throws Indeterminate if some entry is an interval.
    std::vector<Int> values() const;

    CohomTable& operator+=(const CohomTable& other);
    friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

/// Exact table scaled by a non-negative multiplicity.
CohomTable scaled(const CohomTable& t, Int mult);

} // namespace ulrich
