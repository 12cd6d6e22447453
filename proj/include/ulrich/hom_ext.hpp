#pragma once

#include <vector>

#include "ulrich/cohom_table.hpp"
#include "ulrich/sheaf.hpp"

namespace ulrich {

/// dim Ext^k for k = first, first+1, ...; zero outside the stored range.
struct ExtTable {
    int first = 0;
    std::vector<Interval> dims;

    Interval at(int k) const;
    int last() const { return first + static_cast<int>(dims.size()) - 1; }
    bool is_exact() const;
    /// Sum of upper bounds over all degrees.
    Int total_hi() const;
};

/// Ext^k(L^v[-shift], Y) = h^{k+shift}(Y (x) L) for a line bundle L = O_S(line).
ExtTable ext_line_vs_atom(const ScrollData& s, const Divisor& line, int shift, const Atom& y);

/// Ext^k(X, Y), k = 0..n+1. Exact whenever X or Y is a line bundle; for two
/// relative differential sheaves, the intersection of interval chases over
/// the Koszul resolutions of either side and their Serre duals. Hom(X, X)
/// gets lower bound 1.
ExtTable hom_upper_bound(const ScrollData& s, const Atom& x, const Atom& y);

/// dim Ext^1(Omega^i(i-1,i), Omega^j(j-1,j)) on the Segre scroll S(1,...,1):
/// (i-j-1) C(n+1, i-j) for i >= j+2, else 0. Throws InvalidInput otherwise.
Int segre_ext1(const ScrollData& s, int i, int j);

} // namespace ulrich
