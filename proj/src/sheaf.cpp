#include "ulrich/sheaf.hpp"

#include "ulrich/errors.hpp"

namespace ulrich {

std::optional<Atom> make_atom(const ScrollData& s, int p, const Divisor& d)
{
    const int n = s.n();
    if (p < 0 || p > n)
        return std::nullopt;
    if (p == n)
        return Atom::line(d + s.relative_canonical());
    return Atom{p, d};
}

Atom omega_atom(const ScrollData& s, int p, const Divisor& d)
{
    auto a = make_atom(s, p, d);
    if (!a)
        throw InvalidInput("Omega^" + std::to_string(p) + " is zero on a scroll with n = " + std::to_string(s.n()));
    return *a;
}

Atom twisted(const Atom& a, const Divisor& d)
{
    return {a.p, a.twist + d};
}

Atom dual(const ScrollData& s, const Atom& a)
{
    if (a.is_line())
        return Atom::line(-a.twist);
    return {s.n() - a.p, -a.twist - s.relative_canonical()};
}

Int rank(const ScrollData& s, const Atom& a)
{
    return binomial(s.n(), a.p);
}

Divisor first_chern(const ScrollData& s, const Atom& a)
{
    const int n = s.n();
    return binomial(n - 1, a.p - 1) * s.relative_canonical() + binomial(n, a.p) * a.twist;
}

std::string to_string(const Atom& a)
{
    std::string tw = to_string(to_pair(a.twist));
    if (a.is_line())
        return "O_S" + tw;
    return "Omega^" + std::to_string(a.p) + tw;
}

void FormalSheaf::add(const Atom& a, Int mult)
{
    if (mult == 0)
        return;
    Int& m = terms_[a];
    m += mult;
    if (m == 0)
        terms_.erase(a);
}

bool FormalSheaf::is_effective() const
{
    for (const auto& [a, m] : terms_)
        if (m < 0)
            return false;
    return true;
}

FormalSheaf FormalSheaf::twisted(const Divisor& d) const
{
    FormalSheaf out;
    for (const auto& [a, m] : terms_)
        out.add(ulrich::twisted(a, d), m);
    return out;
}

FormalSheaf& FormalSheaf::operator+=(const FormalSheaf& o)
{
    for (const auto& [a, m] : o.terms_)
        add(a, m);
    return *this;
}

FormalSheaf wedge_b(const ScrollData& s, Int k, const Divisor& d)
{
    FormalSheaf out;
    for (Int deg : wedge_power(s.E(), k).degrees())
        out.add(Atom::line(d + deg * Divisor::fiber()));
    return out;
}

Int rank(const ScrollData& s, const FormalSheaf& x)
{
    Int r = 0;
    for (const auto& [a, m] : x.terms())
        r += m * rank(s, a);
    return r;
}

Divisor first_chern(const ScrollData& s, const FormalSheaf& x)
{
    Divisor c1;
    for (const auto& [a, m] : x.terms())
        c1 += m * first_chern(s, a);
    return c1;
}

std::string to_string(const FormalSheaf& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (const auto& [a, m] : x.terms()) {
        if (!out.empty())
            out += " + ";
        if (m != 1)
            out += std::to_string(m) + "*";
        out += to_string(a);
    }
    return out;
}

SlopeData deg_slope(const ScrollData& s, const FormalSheaf& x)
{
    SlopeData d;
    d.rank = rank(s, x);
    d.c1 = first_chern(s, x);
    d.deg_h = s.deg_h(d.c1);
    if (d.rank == 0)
        throw InvalidInput("slope undefined for rank zero");
    d.slope = Rational(d.deg_h, d.rank);
    return d;
}

} // namespace ulrich
