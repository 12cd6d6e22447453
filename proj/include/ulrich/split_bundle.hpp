#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "ulrich/types.hpp"

namespace ulrich {

/// A direct sum of line bundles O(d) on the projective line, stored as the
/// sorted multiset of degrees. The empty multiset is the zero bundle.
class SplitBundle {
  public:
    SplitBundle() = default;
    explicit SplitBundle(std::vector<Int> degrees);
    SplitBundle(std::initializer_list<Int> degrees);

    const std::vector<Int>& degrees() const& { return degrees_; }
    std::vector<Int> degrees() && { return std::move(degrees_); }
    Int rank() const { return static_cast<Int>(degrees_.size()); }
    Int degree() const;
    bool is_zero() const { return degrees_.empty(); }

    SplitBundle& operator+=(const SplitBundle& other);
    friend SplitBundle operator+(SplitBundle a, const SplitBundle& b) { return a += b; }
    friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

  private:
    std::vector<Int> degrees_;
};

/// h^i(P^1, B). Total: i >= 2 gives 0.
Int p1_cohomology(const SplitBundle& bundle, int i);
Int p1_chi(const SplitBundle& bundle);

SplitBundle dual(const SplitBundle& bundle);
SplitBundle twist(const SplitBundle& bundle, Int b);
SplitBundle tensor(const SplitBundle& a, const SplitBundle& b);

SplitBundle sym_power(const SplitBundle& bundle, Int k);
SplitBundle wedge_power(const SplitBundle& bundle, Int k);

/// Schur functor of the hook partition (m, 1^p): one summand per semistandard
/// tableau with entries in {0..rank-1}, weighted by the summand degrees.
/// Throws InvalidInput for m < 1 or p < 0; p >= rank gives the zero bundle.
SplitBundle hook_schur(const SplitBundle& bundle, Int m, Int p);

} // namespace ulrich
