#pragma once

#include <optional>
#include <vector>

#include "ulrich/cohom_table.hpp"
#include "ulrich/sheaf.hpp"

namespace ulrich {

/// Bounds for the one unknown member of 0 -> A -> B -> C -> 0 from the long
/// exact cohomology sequence. Exactly one argument must be empty; known
/// members may themselves carry intervals. Degrees run 0..top_degree.
CohomTable ses_bound(const std::optional<CohomTable>& sub,
                     const std::optional<CohomTable>& middle,
                     const std::optional<CohomTable>& quotient,
                     int top_degree);

/// Tightens every entry against the exact Euler characteristic.
void tighten_by_chi(CohomTable& t);

/// Bounds for terms[target] of an exact sequence 0 -> T_0 -> ... -> T_L -> 0
/// where every other term is known. The unknown entry of `terms` is ignored.
CohomTable chase_tables(const std::vector<std::optional<CohomTable>>& terms,
                        std::size_t target, int top_degree);

/// Same, with the known terms given as formal sheaves on S.
CohomTable chase_bounds(const ScrollData& s, const std::vector<FormalSheaf>& complex,
                        std::size_t target);

} // namespace ulrich
