#pragma once

#include <string>
#include <vector>

#include "ulrich/scroll.hpp"

namespace ulrich {

struct SuiteReport {
    std::string suite;
    Int checks = 0;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// Ext^k(E_i, F_j) = [i = j = k].
SuiteReport duality_suite(const ScrollData& s);
/// Every block Omega^i(i,i+1) is Ulrich with h0 = c C(n,i) and slope c-1.
SuiteReport blocks_suite(const ScrollData& s);
/// Hom(Omega^i(i,i), Omega^j(j,j)) = 0 for i != j and Hom(F_i, F_j) = 0 for
/// i > j in {1, 2, 4, ..., 2n}; an interval that is not [0,0] counts as a failure.
SuiteReport homvanish_suite(const ScrollData& s);
/// Koszul alternating sums against the Leray Euler characteristic on a
/// divisor grid, plus chi(Omega^p(bF)) = (-1)^p (b+1) for |b| <= 3.
SuiteReport chi_oracle_suite(const ScrollData& s, Int span = 3);

} // namespace ulrich
