#include "ulrich/scroll.hpp"

#include <algorithm>
#include <numeric>

#include "ulrich/errors.hpp"

namespace ulrich {

std::string to_string(const Divisor& d)
{
    return std::to_string(d.h) + "H" + (d.f < 0 ? "" : "+") + std::to_string(d.f) + "F";
}

std::string to_string(const PairCoords& p)
{
    return "(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
}

ScrollData ScrollData::make(std::vector<Int> degrees)
{
    if (degrees.empty())
        throw InvalidInput("scroll needs at least one degree");
    for (Int a : degrees)
        if (a <= 0)
            throw InvalidInput("scroll degrees must be positive (got " + std::to_string(a) + ")");
    std::sort(degrees.begin(), degrees.end());
    ScrollData s;
    s.c_ = std::accumulate(degrees.begin(), degrees.end(), Int{0});
    s.e_ = SplitBundle(degrees);
    s.degrees_ = std::move(degrees);
    return s;
}

bool ScrollData::is_segre() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](Int a) { return a == 1; });
}

CohomTable line_cohomology(const ScrollData& s, const Divisor& d)
{
    const int n = s.n();
    std::vector<Int> h(static_cast<std::size_t>(n) + 2, 0);
    if (d.h >= 0) {
        SplitBundle push = twist(sym_power(s.E(), d.h), d.f);
        h[0] = p1_cohomology(push, 0);
        h[1] = p1_cohomology(push, 1);
    } else if (d.h <= -n - 1) {
        // h^i(S) = h^{n+1-i}(P^1, Sym^{-a-n-1}E (c-b-2)).
        SplitBundle dualpush = twist(sym_power(s.E(), -d.h - n - 1), s.c() - d.f - 2);
        h[static_cast<std::size_t>(n) + 1] = p1_cohomology(dualpush, 0);
        h[static_cast<std::size_t>(n)] += p1_cohomology(dualpush, 1);
    }
    return CohomTable::from_values(h);
}

Int chi_line(const ScrollData& s, const Divisor& d)
{
    return line_cohomology(s, d).chi;
}

} // namespace ulrich
