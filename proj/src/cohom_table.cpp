#include "ulrich/cohom_table.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"

namespace ulrich {

Int Interval::value() const
{
    if (!is_exact())
        throw Indeterminate("dimension only known as " + to_string(*this));
    return lo;
}

Interval intersect(const Interval& a, const Interval& b)
{
    Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
    if (r.lo > r.hi)
        throw std::logic_error("inconsistent dimension bounds " + to_string(a) + " and " + to_string(b));
    return r;
}

std::string to_string(const Interval& iv)
{
    if (iv.is_exact())
        return std::to_string(iv.lo);
    std::string hi = iv.hi >= kUnbounded ? "inf" : std::to_string(iv.hi);
    return "[" + std::to_string(iv.lo) + "," + hi + "]";
}

CohomTable CohomTable::zero(int top_degree)
{
    CohomTable t;
    t.h.assign(static_cast<std::size_t>(top_degree) + 1, Interval::exactly(0));
    return t;
}

CohomTable CohomTable::from_values(const std::vector<Int>& values)
{
    CohomTable t;
    Int sign = 1;
    for (Int v : values) {
        t.h.push_back(Interval::exactly(v));
        t.chi += sign * v;
        sign = -sign;
    }
    return t;
}

bool CohomTable::is_exact() const
{
    return std::all_of(h.begin(), h.end(), [](const Interval& iv) { return iv.is_exact(); });
}

bool CohomTable::is_zero() const
{
    return std::all_of(h.begin(), h.end(), [](const Interval& iv) { return iv.is_zero(); });
}

Interval CohomTable::at(int i) const
{
    if (i < 0 || i > top_degree())
        return Interval::exactly(0);
    return h[static_cast<std::size_t>(i)];
}

std::vector<Int> CohomTable::values() const
{
    std::vector<Int> out;
    out.reserve(h.size());
    for (const auto& iv : h)
        out.push_back(iv.value());
    return out;
}

CohomTable& CohomTable::operator+=(const CohomTable& other)
{
    if (h.size() < other.h.size())
        h.resize(other.h.size(), Interval::exactly(0));
    for (std::size_t i = 0; i < other.h.size(); ++i) {
        h[i].lo += other.h[i].lo;
        h[i].hi = std::min(kUnbounded, h[i].hi + other.h[i].hi);
    }
    chi += other.chi;
    return *this;
}

CohomTable scaled(const CohomTable& t, Int mult)
{
    CohomTable r = t;
    for (auto& iv : r.h) {
        iv.lo *= mult;
        iv.hi = iv.hi >= kUnbounded ? kUnbounded : iv.hi * mult;
    }
    r.chi *= mult;
    return r;
}

} // namespace ulrich
