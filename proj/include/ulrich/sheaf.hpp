#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ulrich/scroll.hpp"

namespace ulrich {

/// Either a line bundle O_S(D) (p == 0) or a twisted relative differential
/// sheaf Omega^p_{S|P^1}(D) with 1 <= p <= n-1. Build with make_atom so the
/// normalization at p = 0 and p = n is applied.
struct Atom {
    int p = 0;
    Divisor twist;

    bool is_line() const { return p == 0; }
    static constexpr Atom line(Divisor d) { return {0, d}; }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// Omega^p(D) normalized; nullopt (the zero sheaf) when p is outside 0..n.
std::optional<Atom> make_atom(const ScrollData& s, int p, const Divisor& d);
/// Same, but throws InvalidInput instead of returning the zero sheaf.
Atom omega_atom(const ScrollData& s, int p, const Divisor& d);

Atom twisted(const Atom& a, const Divisor& d);
/// Dual sheaf: (Omega^p)^v = Omega^{n-p} (x) omega_{S|P^1}^{-1}.
Atom dual(const ScrollData& s, const Atom& a);

Int rank(const ScrollData& s, const Atom& a);
Divisor first_chern(const ScrollData& s, const Atom& a);

std::string to_string(const Atom& a);

/// Integer combination of atoms. Genuine sheaves have non-negative
/// multiplicities; signed ones are K-classes (rank, c1 and chi only).
class FormalSheaf {
  public:
    FormalSheaf() = default;
    FormalSheaf(const Atom& a, Int mult = 1) { add(a, mult); }

    void add(const Atom& a, Int mult = 1);
    void add(const std::optional<Atom>& a, Int mult = 1)
    {
        if (a)
            add(*a, mult);
    }

    const std::map<Atom, Int>& terms() const& { return terms_; }
    std::map<Atom, Int> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    bool is_effective() const;

    FormalSheaf twisted(const Divisor& d) const;
    FormalSheaf& operator+=(const FormalSheaf& o);
    friend FormalSheaf operator+(FormalSheaf a, const FormalSheaf& b) { return a += b; }
    friend bool operator==(const FormalSheaf&, const FormalSheaf&) = default;

  private:
    std::map<Atom, Int> terms_;
};

/// Direct sum of the line bundles wedge^k(B) (x) O_S(D), B = pi^*E.
FormalSheaf wedge_b(const ScrollData& s, Int k, const Divisor& d);

Int rank(const ScrollData& s, const FormalSheaf& x);
Divisor first_chern(const ScrollData& s, const FormalSheaf& x);
std::string to_string(const FormalSheaf& x);

struct SlopeData {
    Int rank = 0;
    Divisor c1;
    Int deg_h = 0;
    Rational slope;
};

/// Rank, c1, H-degree and slope. Throws InvalidInput when the rank is zero.
SlopeData deg_slope(const ScrollData& s, const FormalSheaf& x);

} // namespace ulrich
