#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ulrich/sheaf.hpp"

namespace ulrich {

/// The pair (s1, s2) with s1 + s2 = i and s1 - s2 in {0, 1}.
std::pair<Int, Int> sigma(Int i);

struct CollectionMember {
    Atom sheaf;
    int shift = 0;
};

/// Ordered by index j = 0..2n+1.
struct Collection {
    char flavor = 'E';
    std::vector<CollectionMember> members;

    std::size_t size() const { return members.size(); }
    const CollectionMember& operator[](std::size_t j) const { return members[j]; }
};

/// The exceptional collection E_j[k_j] and its right dual F_j.
std::pair<Collection, Collection> build_collections(const ScrollData& s);

struct DualityViolation {
    int i = 0;
    int j = 0;
    int k = 0;
    Int value = 0;
};

struct DualityReport {
    bool pass = true;
    /// dims[i][j][k] = dim Ext^k(E_i, F_j), k = 0..2n+1.
    std::vector<std::vector<std::vector<Int>>> dims;
    std::vector<DualityViolation> violations;
};

DualityReport verify_duality(const ScrollData& s);
DualityReport verify_duality(const ScrollData& s, const Collection& e, const Collection& f);

/// Square E1 page: entries[j][q] for columns j and rows q in 0..size-1; the
/// surviving diagonal is q = j. Labels are indexed by j.
struct BeilinsonTable {
    std::vector<std::vector<Int>> entries;
    std::vector<std::string> f_labels;
    std::vector<std::string> e_labels;

    int size() const { return static_cast<int>(entries.size()); }
    Int at(int j, int q) const;
    bool is_zero() const;
    friend bool operator==(const BeilinsonTable&, const BeilinsonTable&) = default;
};

struct ProfileEntry {
    int j = 0;
    int q = 0;
    Int h = 0;
};

/// Caller-supplied values h^{q+k_j}(A (x) E_j); omitted entries are zero.
struct Profile {
    int n = 0;
    std::vector<ProfileEntry> entries;
};

std::vector<std::string> collection_labels(const Collection& c);

/// m_{j,q} = h^{q+k_j}(A (x) E_j) for an effective atom sum A.
BeilinsonTable beilinson_table(const ScrollData& s, const FormalSheaf& a);
/// Table from a profile; throws InvalidInput on negative or out-of-range entries.
BeilinsonTable beilinson_table(const ScrollData& s, const Profile& profile);

/// (a_0, ..., a_n) read from the diagonal: a_0 = m_{1,1}, a_i = m_{2i,2i}.
/// Throws NotUlrich naming the first nonzero slot that carries no block.
std::vector<Int> diagonal_type(const BeilinsonTable& t);

} // namespace ulrich
