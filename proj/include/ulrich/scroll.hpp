#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "ulrich/cohom_table.hpp"
#include "ulrich/split_bundle.hpp"
#include "ulrich/types.hpp"

namespace ulrich {

/// Divisor class hH + fF in the (hyperplane, fiber) basis of Pic(S).
struct Divisor {
    Int h = 0;
    Int f = 0;

    Divisor& operator+=(const Divisor& o)
    {
        h += o.h;
        f += o.f;
        return *this;
    }
    Divisor& operator-=(const Divisor& o)
    {
        h -= o.h;
        f -= o.f;
        return *this;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend Divisor operator-(const Divisor& a) { return {-a.h, -a.f}; }
    friend Divisor operator*(Int k, const Divisor& a) { return {k * a.h, k * a.f}; }
    friend auto operator<=>(const Divisor&, const Divisor&) = default;

    static constexpr Divisor hyperplane() { return {1, 0}; }
    static constexpr Divisor fiber() { return {0, 1}; }
};

/// The two-index notation O_S(u, v) = O_S(vH + (u - v)F), used for I/O only.
struct PairCoords {
    Int u = 0;
    Int v = 0;
    friend auto operator<=>(const PairCoords&, const PairCoords&) = default;
};

constexpr Divisor from_pair(PairCoords p) { return {p.v, p.u - p.v}; }
constexpr Divisor from_pair(Int u, Int v) { return from_pair(PairCoords{u, v}); }
constexpr PairCoords to_pair(const Divisor& d) { return {d.h + d.f, d.h}; }

std::string to_string(const Divisor& d);
std::string to_string(const PairCoords& p);

/// Smooth rational normal scroll S(a_0, ..., a_n) = P(O(a_0) + ... + O(a_n)).
class ScrollData {
  public:
    /// Sorts the degrees; throws InvalidInput for empty input or any a_i <= 0.
    static ScrollData make(std::vector<Int> degrees);

    const std::vector<Int>& degrees() const& { return degrees_; }
    std::vector<Int> degrees() && { return std::move(degrees_); }
    int n() const { return static_cast<int>(degrees_.size()) - 1; }
    int dim() const { return n() + 1; }
    Int c() const { return c_; }
    Int ambient_dim() const { return c_ + n(); }
    const SplitBundle& E() const { return e_; }
    bool is_segre() const;

    /// omega_S = -(n+1)H + (c-2)F.
    Divisor canonical() const { return {-(n() + 1), c_ - 2}; }
    /// omega_{S|P^1} = -(n+1)H + cF.
    Divisor relative_canonical() const { return {-(n() + 1), c_}; }
    /// Degree D.H^n with H^{n+1} = c, H^n.F = 1.
    Int deg_h(const Divisor& d) const { return d.h * c_ + d.f; }

    friend bool operator==(const ScrollData& a, const ScrollData& b) { return a.degrees_ == b.degrees_; }

  private:
    std::vector<Int> degrees_;
    Int c_ = 0;
    SplitBundle e_;
};

/// h^i(S, O_S(D)) for i = 0..n+1, all exact.
CohomTable line_cohomology(const ScrollData& s, const Divisor& d);
Int chi_line(const ScrollData& s, const Divisor& d);

} // namespace ulrich
