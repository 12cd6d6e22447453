#include <doctest.h>

#include "oracles.hpp"
#include "ulrich/beilinson.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/hom_ext.hpp"
#include "ulrich/rel_diff.hpp"

using namespace ulrich;

TEST_CASE("Ext between structure sheaves")
{
    auto s = ScrollData::make({1, 2, 3});
    ExtTable e = ext_line_vs_atom(s, {0, 0}, 0, Atom::line({0, 0}));
    CHECK(e.at(0).value() == 1);
    for (int k = 1; k <= 4; ++k)
        CHECK(e.at(k).value() == 0);
    CHECK(e.is_exact());
}

TEST_CASE("the last pair of the collections pairs in top degree")
{
    for (const auto& degs : oracle::scrolls(1, 4, 7)) {
        auto s = ScrollData::make(degs);
        const int n = s.n();
        auto [e, f] = build_collections(s);
        const auto& last = e[static_cast<std::size_t>(2 * n + 1)];
        ExtTable t = ext_line_vs_atom(s, last.sheaf.twist, last.shift, f[static_cast<std::size_t>(2 * n + 1)].sheaf);
        CHECK(t.total_hi() == 1);
        CHECK(t.at(2 * n + 1).value() == 1);
    }
}

TEST_CASE("line against line is the cohomology of the difference")
{
    auto s = ScrollData::make({1, 1, 2});
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -4; b <= 4; ++b) {
            Divisor x{a, b}, y{1 - a, 2 * b - 1};
            ExtTable e = hom_upper_bound(s, Atom::line(x), Atom::line(y));
            auto h = line_cohomology(s, y - x);
            for (int k = 0; k <= s.n() + 1; ++k)
                CHECK(e.at(k).value() == h.at(k).value());
        }
}

TEST_CASE("Hom bounds on the Segre scroll contain the Kunneth values")
{
    // Ext^k(Omega^i(i-1,i), Omega^j(j-1,j)) = H^*(O(j-i)) (x) Hom(Omega^i(i), Omega^j(j)) on P^1 x P^n
    for (int n = 2; n <= 4; ++n) {
        auto s = ScrollData::make(std::vector<Int>(static_cast<std::size_t>(n) + 1, 1));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                Atom x = omega_atom(s, i, from_pair(i - 1, i));
                Atom y = omega_atom(s, j, from_pair(j - 1, j));
                ExtTable e = hom_upper_bound(s, x, y);
                Int hom_pn = i >= j ? oracle::binom(n + 1, i - j) : 0;
                CHECK(e.at(0).contains(oracle::p1_h0(j - i) * hom_pn));
                CHECK(e.at(1).contains(oracle::p1_h1(j - i) * hom_pn));
                CHECK(e.at(1).contains(segre_ext1(s, i, j)));
            }
    }
}

TEST_CASE("Hom vanishing between twisted differentials")
{
    for (const auto& degs : std::vector<std::vector<Int>>{{1, 2}, {1, 1, 1}, {1, 3, 4}, {2, 2, 2, 5}, {1, 1, 2, 3, 3}}) {
        auto s = ScrollData::make(degs);
        const int n = s.n();
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                ExtTable e = hom_upper_bound(s, omega_atom(s, i, from_pair(i, i)), omega_atom(s, j, from_pair(j, j)));
                if (i != j)
                    CHECK(e.at(0).is_zero());
                else
                    CHECK(e.at(0).lo >= 1);
            }
        auto [ec, f] = build_collections(s);
        // Hom(F_2n, F_1) = h0(O(1-c, 1)) = h0(E(-c)) = 0
        ExtTable e = hom_upper_bound(s, f[static_cast<std::size_t>(2 * n)].sheaf, f[1].sheaf);
        CHECK(e.is_exact());
        CHECK(e.at(0).value() == 0);
    }
}

TEST_CASE("Ext^1(Omega^1(0,1), O(-1,0)) is the sum of a_i - 1")
{
    for (const auto& degs : oracle::scrolls(2, 4, 9)) {
        auto s = ScrollData::make(degs);
        ExtTable e = hom_upper_bound(s, omega_atom(s, 1, from_pair(0, 1)), Atom::line(from_pair(-1, 0)));
        Int want = 0;
        for (Int a : degs)
            want += a - 1;
        CHECK(e.at(1).value() == want);
        CHECK((e.at(1).value() == 0) == s.is_segre());
    }
}

TEST_CASE("Segre Ext^1 closed form")
{
    auto s = ScrollData::make({1, 1, 1, 1});
    CHECK(segre_ext1(s, 2, 0) == 6);
    CHECK(segre_ext1(s, 3, 0) == 8);
    CHECK(segre_ext1(s, 3, 2) == 0);
    CHECK(segre_ext1(s, 0, 3) == 0);
    CHECK_THROWS_AS(segre_ext1(ScrollData::make({1, 1, 2}), 2, 0), InvalidInput);
    CHECK_THROWS_AS(segre_ext1(s, 4, 0), InvalidInput);
}
