#include "ulrich/hom_ext.hpp"

#include <algorithm>

#include "ulrich/chase.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/rel_diff.hpp"

namespace ulrich {

namespace {

ExtTable from_table(const CohomTable& t, int first)
{
    return {first, t.h};
}

// Tensor a sum of line bundles (as a formal sheaf) with an atom.
FormalSheaf tensor_lines(const FormalSheaf& lines, const Atom& a)
{
    FormalSheaf out;
    for (const auto& [line, m] : lines.terms())
        out.add(twisted(a, line.twist), m);
    return out;
}

FormalSheaf dual_lines(const FormalSheaf& lines)
{
    FormalSheaf out;
    for (const auto& [line, m] : lines.terms())
        out.add(Atom::line(-line.twist), m);
    return out;
}

// H^*(X^v (x) Y) from the dualized resolution of X:
// 0 -> X^v (x) Y -> C_m^v (x) Y -> ... -> C_0^v (x) Y -> 0.
CohomTable via_resolution(const ScrollData& s, const Atom& x, const Atom& y)
{
    KoszulResolution res = koszul_resolution(s, x.p, x.twist - Divisor::hyperplane());
    std::vector<FormalSheaf> complex{FormalSheaf{}};
    for (auto it = res.terms.rbegin(); it != res.terms.rend(); ++it)
        complex.push_back(tensor_lines(dual_lines(*it), y));
    return chase_bounds(s, complex, 0);
}

// H^*(X^v (x) Y) from the coresolution of Y:
// 0 -> X^v (x) Y -> X^v (x) T_0 -> ... -> X^v (x) T_q -> 0.
CohomTable via_coresolution(const ScrollData& s, const Atom& x, const Atom& y)
{
    KoszulCoresolution cores = koszul_coresolution(s, y.p, y.twist);
    const Atom xd = dual(s, x);
    std::vector<FormalSheaf> complex{FormalSheaf{}};
    for (const auto& t : cores.terms)
        complex.push_back(tensor_lines(t, xd));
    return chase_bounds(s, complex, 0);
}

CohomTable serre_reversed(const CohomTable& t, int top)
{
    CohomTable r;
    r.h.assign(t.h.rbegin(), t.h.rend());
    r.chi = (top % 2 == 0) ? t.chi : -t.chi;
    return r;
}

void intersect_into(CohomTable& acc, const CohomTable& other)
{
    if (acc.chi != other.chi)
        throw std::logic_error("Euler characteristics of two chase routes disagree");
    for (std::size_t i = 0; i < acc.h.size(); ++i)
        acc.h[i] = intersect(acc.h[i], other.h[i]);
}

} // namespace

Interval ExtTable::at(int k) const
{
    if (k < first || k > last())
        return Interval::exactly(0);
    return dims[static_cast<std::size_t>(k - first)];
}

bool ExtTable::is_exact() const
{
    return std::all_of(dims.begin(), dims.end(), [](const Interval& iv) { return iv.is_exact(); });
}

Int ExtTable::total_hi() const
{
    Int total = 0;
    for (const auto& iv : dims)
        total = std::min(kUnbounded, total + iv.hi);
    return total;
}

ExtTable ext_line_vs_atom(const ScrollData& s, const Divisor& line, int shift, const Atom& y)
{
    return from_table(atom_cohomology(s, twisted(y, line)), -shift);
}

ExtTable hom_upper_bound(const ScrollData& s, const Atom& x, const Atom& y)
{
    if (x.is_line())
        return from_table(atom_cohomology(s, twisted(y, -x.twist)), 0);
    if (y.is_line())
        return from_table(atom_cohomology(s, twisted(dual(s, x), y.twist)), 0);

    const int top = s.n() + 1;
    // Serre duality: Ext^k(X, Y) = h^{n+1-k}(Hom(Y, X (x) omega_S)).
    const Atom xw = twisted(x, s.canonical());
    CohomTable acc = via_resolution(s, x, y);
    intersect_into(acc, via_coresolution(s, x, y));
    intersect_into(acc, serre_reversed(via_resolution(s, y, xw), top));
    intersect_into(acc, serre_reversed(via_coresolution(s, y, xw), top));
    if (x == y)
        acc.h[0].lo = std::max<Int>(acc.h[0].lo, 1);
    tighten_by_chi(acc);
    return from_table(acc, 0);
}

Int segre_ext1(const ScrollData& s, int i, int j)
{
    if (!s.is_segre())
        throw InvalidInput("segre_ext1 requires the Segre scroll S(1,...,1)");
    const int n = s.n();
    if (i < 0 || i > n || j < 0 || j > n)
        throw InvalidInput("segre_ext1: block index out of range");
    if (i < j + 2)
        return 0;
    return (i - j - 1) * binomial(n + 1, i - j);
}

} // namespace ulrich
