#pragma once

#include <vector>

#include "ulrich/cohom_table.hpp"
#include "ulrich/sheaf.hpp"
#include "ulrich/split_bundle.hpp"

namespace ulrich {

/// Which single fiber cohomology degree of Omega^p_{P^n}(a) survives.
enum class FiberRegime {
    Sections, ///< q0 = 0, a >= p+1
    Middle,   ///< q0 = p, a = 0
    Top,      ///< q0 = n, a <= p-n-1
    Acyclic,  ///< no cohomology on any fiber
};

struct Pushforward {
    FiberRegime regime = FiberRegime::Acyclic;
    int degree = -1; ///< q0, or -1 when acyclic
    SplitBundle bundle;
};

/// The only nonzero R^{q0} pi_* of Omega^p_{S|P^1}(D). p outside 0..n gives
/// the acyclic zero result.
Pushforward rel_pushforward(const ScrollData& s, int p, const Divisor& d);

/// h^i(S, Omega^p_{S|P^1}(D)) via Leray over P^1; exact.
CohomTable omega_cohomology(const ScrollData& s, int p, const Divisor& d);
CohomTable atom_cohomology(const ScrollData& s, const Atom& a);
/// Exact cohomology of an effective formal sum; throws InvalidInput on signed input.
CohomTable sheaf_cohomology(const ScrollData& s, const FormalSheaf& x);
/// Signed Euler characteristic of a K-class.
Int sheaf_chi(const ScrollData& s, const FormalSheaf& x);

/// Exact sequence 0 -> terms[0] -> ... -> terms.back() -> resolved -> 0.
struct KoszulResolution {
    std::vector<FormalSheaf> terms;
    Atom resolved;
};

/// Truncated exterior-power Koszul complex of the relative Euler sequence,
/// with terms O_S(c-n,-n)(D), wedge^n B(-n+1,-n+1)(D), ..., wedge^{p+1} B(-p,-p)(D).
/// It resolves Omega^p(D + H); at p = n the single term is an isomorphism.
KoszulResolution koszul_resolution(const ScrollData& s, int p, const Divisor& d);

/// Exact sequence 0 -> resolved -> terms[0] -> ... -> terms.back() -> 0 with
/// terms wedge^q B(-qH + D), wedge^{q-1} B(-(q-1)H + D), ..., O_S(D);
/// resolved = Omega^q(D).
struct KoszulCoresolution {
    Atom resolved;
    std::vector<FormalSheaf> terms;
};
KoszulCoresolution koszul_coresolution(const ScrollData& s, int q, const Divisor& d);

/// h^i(P^n, Omega^p(k)), i = 0..n, by Bott's formula.
CohomTable pn_omega_cohomology(int n, int p, Int k);

} // namespace ulrich
