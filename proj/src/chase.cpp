#include "ulrich/chase.hpp"

#include <algorithm>

#include "ulrich/errors.hpp"
#include "ulrich/rel_diff.hpp"

namespace ulrich {

namespace {

Int sat(Int v)
{
    return std::clamp(v, -kUnbounded, kUnbounded);
}

Interval intersect_or_empty(const Interval& a, const Interval& b)
{
    return {std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

Interval checked(Interval iv, const char* where)
{
    iv.lo = std::max<Int>(iv.lo, 0);
    iv.hi = std::min(iv.hi, kUnbounded);
    if (iv.lo > iv.hi)
        throw std::logic_error(std::string("inconsistent exact sequence data in ") + where);
    return iv;
}

CohomTable padded(const CohomTable& t, int top_degree)
{
    CohomTable r = t;
    r.h.resize(static_cast<std::size_t>(top_degree) + 1, Interval::exactly(0));
    return r;
}

} // namespace

CohomTable ses_bound(const std::optional<CohomTable>& sub,
                     const std::optional<CohomTable>& middle,
                     const std::optional<CohomTable>& quotient,
                     int top_degree)
{
    const int unknown = !sub ? 0 : !middle ? 1 : !quotient ? 2 : -1;
    if (unknown < 0 || (!sub + !middle + !quotient) != 1)
        throw std::invalid_argument("ses_bound: exactly one member must be unknown");

    const std::optional<CohomTable>* members[3] = {&sub, &middle, &quotient};
    // Long exact sequence A^0 B^0 C^0 A^1 ... C^N as a chain of dimensions;
    // r[k] is the rank of the map into term k.
    const std::size_t terms = 3 * (static_cast<std::size_t>(top_degree) + 1);
    std::vector<Interval> dims(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        const auto& m = *members[k % 3];
        dims[k] = m ? padded(*m, top_degree).h[k / 3] : Interval::unknown();
    }
    std::vector<Interval> r(terms + 1, Interval::unknown());
    r[0] = Interval::exactly(0);
    for (std::size_t k = 0; k < terms; ++k) {
        Interval next{sat(dims[k].lo - r[k].hi), sat(dims[k].hi - r[k].lo)};
        r[k + 1] = checked(intersect_or_empty(r[k + 1], next), "forward pass");
    }
    r[terms] = checked(intersect_or_empty(r[terms], Interval::exactly(0)), "final rank");
    for (std::size_t k = terms; k-- > 0;) {
        Interval prev{sat(dims[k].lo - r[k + 1].hi), sat(dims[k].hi - r[k + 1].lo)};
        r[k] = checked(intersect_or_empty(r[k], prev), "backward pass");
    }

    CohomTable out;
    Int chi = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == unknown)
            continue;
        Int sign = (i == 1) ? -1 : 1;
        chi += sign * (*members[i])->chi;
    }
    // chi(A) - chi(B) + chi(C) = 0
    out.chi = (unknown == 1) ? chi : -chi;
    for (int deg = 0; deg <= top_degree; ++deg) {
        std::size_t k = 3 * static_cast<std::size_t>(deg) + static_cast<std::size_t>(unknown);
        Interval iv{std::max(dims[k].lo, sat(r[k].lo + r[k + 1].lo)),
                    std::min(dims[k].hi, sat(r[k].hi + r[k + 1].hi))};
        out.h.push_back(checked(iv, "result"));
    }
    tighten_by_chi(out);
    return out;
}

void tighten_by_chi(CohomTable& t)
{
    const std::size_t len = t.h.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < len; ++i) {
            // sign_i x_i = chi - sum_{j != i} sign_j x_j
            Int lo = t.chi;
            Int hi = t.chi;
            bool lo_finite = true;
            bool hi_finite = true;
            for (std::size_t j = 0; j < len; ++j) {
                if (j == i)
                    continue;
                const Interval& x = t.h[j];
                bool unbounded = x.hi >= kUnbounded;
                if (j % 2 == 0) {
                    lo -= unbounded ? 0 : x.hi;
                    lo_finite = lo_finite && !unbounded;
                    hi -= x.lo;
                } else {
                    lo += x.lo;
                    hi += unbounded ? 0 : x.hi;
                    hi_finite = hi_finite && !unbounded;
                }
            }
            Interval bound = Interval::unknown();
            if (i % 2 == 0) {
                if (lo_finite)
                    bound.lo = std::max<Int>(0, lo);
                if (hi_finite)
                    bound.hi = hi;
            } else {
                if (hi_finite)
                    bound.lo = std::max<Int>(0, -hi);
                if (lo_finite)
                    bound.hi = -lo;
            }
            Interval next = checked(intersect_or_empty(t.h[i], bound), "Euler characteristic");
            if (!(next == t.h[i])) {
                t.h[i] = next;
                changed = true;
            }
        }
    }
}

CohomTable chase_tables(const std::vector<std::optional<CohomTable>>& terms,
                        std::size_t target, int top_degree)
{
    const std::size_t len = terms.size();
    if (target >= len)
        throw std::invalid_argument("chase_tables: target outside the sequence");
    for (std::size_t j = 0; j < len; ++j)
        if (j != target && !terms[j])
            throw std::invalid_argument("chase_tables: only the target may be unknown");

    // Z_j = image(T_{j-1} -> T_j); 0 -> Z_j -> T_j -> Z_{j+1} -> 0.
    CohomTable left = CohomTable::zero(top_degree);
    for (std::size_t j = 0; j < target; ++j)
        left = ses_bound(left, *terms[j], std::nullopt, top_degree);
    CohomTable right = CohomTable::zero(top_degree);
    for (std::size_t j = len; j-- > target + 1;)
        right = ses_bound(std::nullopt, *terms[j], right, top_degree);
    return ses_bound(left, std::nullopt, right, top_degree);
}

CohomTable chase_bounds(const ScrollData& s, const std::vector<FormalSheaf>& complex,
                        std::size_t target)
{
    std::vector<std::optional<CohomTable>> tables;
    tables.reserve(complex.size());
    for (std::size_t j = 0; j < complex.size(); ++j) {
        if (j == target)
            tables.emplace_back(std::nullopt);
        else
            tables.emplace_back(sheaf_cohomology(s, complex[j]));
    }
    return chase_tables(tables, target, s.n() + 1);
}

} // namespace ulrich
