#include "ulrich/verify.hpp"

#include "ulrich/beilinson.hpp"
#include "ulrich/classify.hpp"
#include "ulrich/hom_ext.hpp"
#include "ulrich/rel_diff.hpp"

namespace ulrich {

namespace {

std::string tag(const char* what, int i, int j)
{
    return std::string(what) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

SuiteReport duality_suite(const ScrollData& s)
{
    SuiteReport r{"duality", 0, {}};
    DualityReport d = verify_duality(s);
    const Int size = static_cast<Int>(d.dims.size());
    r.checks = size * size * size;
    for (const auto& v : d.violations)
        r.failures.push_back("Ext^" + std::to_string(v.k) + "(E_" + std::to_string(v.i) + ",F_" +
                             std::to_string(v.j) + ") = " + std::to_string(v.value));
    return r;
}

SuiteReport blocks_suite(const ScrollData& s)
{
    SuiteReport r{"blocks", 0, {}};
    for (int i = 0; i <= s.n(); ++i) {
        FormalSheaf b = block(s, i);
        UlrichVerdict v = is_ulrich(s, b);
        ++r.checks;
        for (const auto& f : v.failures)
            r.failures.push_back("block " + std::to_string(i) + ": " + f);
        ++r.checks;
        if (v.h0 != s.c() * binomial(s.n(), i))
            r.failures.push_back("block " + std::to_string(i) + ": h0 = " + std::to_string(v.h0));
        ++r.checks;
        if (deg_slope(s, b).slope != Rational(s.c() - 1))
            r.failures.push_back("block " + std::to_string(i) + ": slope differs from c-1");
    }
    return r;
}

SuiteReport homvanish_suite(const ScrollData& s)
{
    SuiteReport r{"homvanish", 0, {}};
    const int n = s.n();
    auto check = [&](const std::string& name, const Atom& x, const Atom& y) {
        ++r.checks;
        Interval h = hom_upper_bound(s, x, y).at(0);
        if (!h.is_zero())
            r.failures.push_back(name + " = " + to_string(h));
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j)
                check(tag("Hom_omega", i, j), omega_atom(s, i, from_pair(i, i)), omega_atom(s, j, from_pair(j, j)));
    if (n >= 1) {
        auto [e, f] = build_collections(s);
        std::vector<int> idx{1};
        for (int i = 1; i <= n; ++i)
            idx.push_back(2 * i);
        for (int a : idx)
            for (int b : idx)
                if (a > b)
                    check(tag("Hom_F", a, b), f[a].sheaf, f[b].sheaf);
    }
    return r;
}

SuiteReport chi_oracle_suite(const ScrollData& s, Int span)
{
    SuiteReport r{"chi-oracle", 0, {}};
    const int n = s.n();
    for (int p = 0; p <= n; ++p) {
        for (Int h = -n - 2 - span; h <= n + 2 + span; ++h) {
            for (Int f = -s.c() - span; f <= s.c() + span; ++f) {
                const Divisor d{h, f};
                Int leray = omega_cohomology(s, p, d + Divisor::hyperplane()).chi;
                KoszulResolution res = koszul_resolution(s, p, d);
                Int alt = 0;
                // terms run from the left end; the last one maps onto the resolved sheaf
                const int len = static_cast<int>(res.terms.size());
                for (int t = 0; t < len; ++t)
                    alt += ((len - 1 - t) % 2 == 0 ? 1 : -1) * sheaf_chi(s, res.terms[t]);
                ++r.checks;
                if (alt != leray)
                    r.failures.push_back("resolution chi mismatch p=" + std::to_string(p) + " D=" + to_string(d));

                KoszulCoresolution co = koszul_coresolution(s, p, d);
                Int alt2 = 0;
                for (std::size_t t = 0; t < co.terms.size(); ++t)
                    alt2 += (t % 2 == 0 ? 1 : -1) * sheaf_chi(s, co.terms[t]);
                ++r.checks;
                if (alt2 != omega_cohomology(s, p, d).chi)
                    r.failures.push_back("coresolution chi mismatch p=" + std::to_string(p) + " D=" + to_string(d));
            }
        }
        for (Int b = -3; b <= 3; ++b) {
            ++r.checks;
            Int want = (p % 2 == 0 ? 1 : -1) * (b + 1);
            if (omega_cohomology(s, p, {0, b}).chi != want)
                r.failures.push_back("chi(Omega^" + std::to_string(p) + "(" + std::to_string(b) + "F))");
        }
    }
    return r;
}

} // namespace ulrich
