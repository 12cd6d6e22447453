#pragma once

#include <string>
#include <vector>

#include "ulrich/beilinson.hpp"
#include "ulrich/cohom_table.hpp"
#include "ulrich/sheaf.hpp"

namespace ulrich {

/// Filtration multiplicities (a_0, ..., a_n) of the building blocks.
struct UlrichType {
    std::vector<Int> a;
    friend auto operator<=>(const UlrichType&, const UlrichType&) = default;
};

/// Parses "a0,a1,...,an"; throws InvalidInput.
UlrichType parse_type(const std::string& text, int n);

/// Building block Omega^i(i, i+1); O_S(0,1) at i = 0 and O_S(c-1,0) at i = n.
FormalSheaf block(const ScrollData& s, int i);
/// Direct sum of blocks with the given multiplicities.
FormalSheaf block_sum(const ScrollData& s, const UlrichType& t);

struct UlrichVerdict {
    bool pass = false;
    Int rank = 0;
    Int h0 = 0;
    Int h0_minus_h = 0;
    /// Cohomology of V(-jH) for j = 1..n+1.
    std::vector<CohomTable> twists;
    std::vector<std::string> failures;
};

/// Ulrich criterion: H^*(V(-jH)) = 0 for j = 1..n+1, h^0(V) = c rank(V) and
/// h^0(V(-H)) = 0. Throws InvalidInput for signed multiplicities.
UlrichVerdict is_ulrich(const ScrollData& s, const FormalSheaf& v);

/// Type of an Ulrich atom sum: shift by -H and read the Beilinson diagonal.
UlrichType classify(const ScrollData& s, const FormalSheaf& v);
/// Type from a measured profile of A = V(-H).
UlrichType classify(const ScrollData& s, const Profile& profile);

struct TypeInfo {
    UlrichType type;
    Int rank = 0;
    Divisor c1;
    Int h0 = 0;
    Rational slope;
    /// Indices i whose block is a line bundle.
    std::vector<int> line_blocks;
};

TypeInfo describe_type(const ScrollData& s, const UlrichType& t);
/// All types of the given rank, lexicographically ascending.
std::vector<TypeInfo> enumerate_types_by_rank(const ScrollData& s, Int rank);
std::vector<TypeInfo> enumerate_types_by_h0(const ScrollData& s, Int h0);

// Veronese embeddings (P^d, O(2)), d in {2, 3}: E_j = O(-j), right dual F_j.

/// Labels of the two collections on P^dim; throws InvalidInput unless dim is 2 or 3.
BeilinsonTable veronese_table(int dim, const Profile& profile);
/// Table of A = Omega^p_{P^dim}(k): m_{j,q} = h^q(Omega^p(k-j)).
BeilinsonTable veronese_table(int dim, int p, Int k);
/// Duality check h^q(E_i (x) F_j) = [i = j = q] for the projective-space collections.
DualityReport verify_veronese_duality(int dim);
/// Diagonal multiplicities of columns 1..dim-1; throws NotUlrich on any other nonzero slot.
std::vector<Int> veronese_diagonal(const BeilinsonTable& t);

} // namespace ulrich
