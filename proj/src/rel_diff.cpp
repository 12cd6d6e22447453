#include "ulrich/rel_diff.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

Pushforward rel_pushforward(const ScrollData& s, int p, const Divisor& d)
{
    const int n = s.n();
    const Int a = d.h;
    const Int b = d.f;
    Pushforward out;
    if (p < 0 || p > n)
        return out;
    if (a >= p + 1) {
        out.regime = FiberRegime::Sections;
        out.degree = 0;
        out.bundle = twist(hook_schur(s.E(), a - p, p), b);
    } else if (a == 0) {
        // R^p pi_* Omega^p_{S|P^1} is trivial
        out.regime = FiberRegime::Middle;
        out.degree = p;
        out.bundle = SplitBundle{b};
    } else if (a <= p - n - 1) {
        // relative duality: R^n pi_* Omega^p(aH) = (pi_* Omega^{n-p}(-aH))^v
        out.regime = FiberRegime::Top;
        out.degree = n;
        out.bundle = dual(twist(hook_schur(s.E(), -a - (n - p), n - p), -b));
    }
    return out;
}

CohomTable omega_cohomology(const ScrollData& s, int p, const Divisor& d)
{
    std::vector<Int> h(static_cast<std::size_t>(s.n()) + 2, 0);
    Pushforward push = rel_pushforward(s, p, d);
    if (push.regime != FiberRegime::Acyclic) {
        auto q0 = static_cast<std::size_t>(push.degree);
        h[q0] += p1_cohomology(push.bundle, 0);
        h[q0 + 1] += p1_cohomology(push.bundle, 1);
    }
    return CohomTable::from_values(h);
}

CohomTable atom_cohomology(const ScrollData& s, const Atom& a)
{
    if (a.is_line())
        return line_cohomology(s, a.twist);
    return omega_cohomology(s, a.p, a.twist);
}

CohomTable sheaf_cohomology(const ScrollData& s, const FormalSheaf& x)
{
    if (!x.is_effective())
        throw InvalidInput("cohomology of a signed formal sum is not defined: " + to_string(x));
    CohomTable total = CohomTable::zero(s.n() + 1);
    for (const auto& [a, m] : x.terms())
        total += scaled(atom_cohomology(s, a), m);
    return total;
}

Int sheaf_chi(const ScrollData& s, const FormalSheaf& x)
{
    Int chi = 0;
    for (const auto& [a, m] : x.terms())
        chi += m * atom_cohomology(s, a).chi;
    return chi;
}

KoszulResolution koszul_resolution(const ScrollData& s, int p, const Divisor& d)
{
    const int n = s.n();
    if (p < 0 || p > n)
        throw InvalidInput("koszul_resolution: p out of range");
    KoszulResolution res{{}, omega_atom(s, p, d + Divisor::hyperplane())};
    for (Int l = n + 1; l >= p + 1; --l)
        res.terms.push_back(wedge_b(s, l, d + Divisor{1 - l, 0}));
    return res;
}

KoszulCoresolution koszul_coresolution(const ScrollData& s, int q, const Divisor& d)
{
    if (q < 0 || q > s.n())
        throw InvalidInput("koszul_coresolution: q out of range");
    KoszulCoresolution res{omega_atom(s, q, d), {}};
    for (Int l = q; l >= 0; --l)
        res.terms.push_back(wedge_b(s, l, d + Divisor{-l, 0}));
    return res;
}

CohomTable pn_omega_cohomology(int n, int p, Int k)
{
    if (n < 1)
        throw InvalidInput("pn_omega_cohomology: n must be positive");
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, 0);
    if (p >= 0 && p <= n) {
        const SplitBundle trivial(std::vector<Int>(static_cast<std::size_t>(n) + 1, 0));
        if (k >= p + 1)
            h[0] = hook_schur(trivial, k - p, p).rank();
        else if (k == 0)
            h[static_cast<std::size_t>(p)] = 1;
        else if (k <= p - n - 1)
            h[static_cast<std::size_t>(n)] = hook_schur(trivial, -k - (n - p), n - p).rank();
    }
    return CohomTable::from_values(h);
}

} // namespace ulrich
