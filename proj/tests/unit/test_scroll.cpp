#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/scroll.hpp"

using namespace ulrich;

TEST_CASE("scroll data")
{
    auto s = ScrollData::make({3, 1, 2});
    CHECK(s.degrees() == std::vector<Int>{1, 2, 3});
    CHECK(s.n() == 2);
    CHECK(s.dim() == 3);
    CHECK(s.c() == 6);
    CHECK(s.ambient_dim() == 8);
    CHECK(!s.is_segre());
    CHECK(ScrollData::make({1, 1, 1}).is_segre());
    CHECK(s.canonical() == Divisor{-3, 4});
    CHECK(s.relative_canonical() == Divisor{-3, 6});
    CHECK(s.deg_h({1, 0}) == 6);
    CHECK(s.deg_h({0, 1}) == 1);
    CHECK_THROWS_AS(ScrollData::make({}), InvalidInput);
    CHECK_THROWS_AS(ScrollData::make({1, 0}), InvalidInput);
    CHECK_THROWS_AS(ScrollData::make({-2, 3}), InvalidInput);
}

TEST_CASE("pair basis")
{
    CHECK(from_pair(2, 2) == Divisor{2, 0});
    CHECK(from_pair(0, 1) == Divisor{1, -1});
    CHECK(from_pair(-1, 0) == Divisor{0, -1});
    for (Int u = -3; u <= 3; ++u)
        for (Int v = -3; v <= 3; ++v) {
            auto p = to_pair(from_pair(u, v));
            CHECK(p.u == u);
            CHECK(p.v == v);
        }
}

TEST_CASE("h0 of Sym^2 E on S(1,2)")
{
    auto s = ScrollData::make({1, 2});
    CHECK(line_cohomology(s, from_pair(2, 2)).values() == std::vector<Int>{12, 0, 0});
    CHECK(line_cohomology(s, {0, 0}).values() == std::vector<Int>{1, 0, 0});
}

TEST_CASE("line cohomology against monomial counts and the chi polynomial")
{
    for (const auto& degs : oracle::scrolls(1, 3, 7)) {
        auto s = ScrollData::make(degs);
        const int n = s.n();
        const Divisor k = s.canonical();
        for (Int a = -n - 4; a <= 4; ++a) {
            for (Int b = -2 * s.c() - 3; b <= 2 * s.c() + 3; ++b) {
                CohomTable h = line_cohomology(s, {a, b});
                REQUIRE(h.is_exact());
                CHECK(h.at(0).value() == oracle::h0_line(degs, a, b));
                CHECK(h.at(n + 1).value() == oracle::h0_line(degs, k.h - a, k.f - b));
                CHECK(h.chi == oracle::chi_line(n, s.c(), a, b));
                Int alt = 0;
                for (int i = 0; i <= n + 1; ++i)
                    alt += (i % 2 ? -1 : 1) * h.at(i).value();
                CHECK(alt == h.chi);
                if (a > -n - 1 && a < 0)
                    CHECK(h.is_zero());
                for (int i = 2; i <= n - 1; ++i)
                    CHECK(h.at(i).value() == 0);
            }
        }
    }
}

TEST_CASE("Serre duality for line bundles")
{
    std::mt19937 rng(3);
    for (const auto& degs : oracle::scrolls(1, 4, 8)) {
        auto s = ScrollData::make(degs);
        std::uniform_int_distribution<Int> dh(-2 * s.n() - 4, 2 * s.n() + 4), df(-3 * s.c(), 3 * s.c());
        for (int t = 0; t < 50; ++t) {
            Divisor d{dh(rng), df(rng)};
            auto h = line_cohomology(s, d).values();
            auto g = line_cohomology(s, s.canonical() - d).values();
            std::reverse(g.begin(), g.end());
            CHECK(h == g);
        }
    }
}

TEST_CASE("the degenerate scroll P^1")
{
    auto s = ScrollData::make({3});
    CHECK(s.n() == 0);
    for (Int a = -3; a <= 3; ++a)
        for (Int b = -5; b <= 5; ++b) {
            auto h = line_cohomology(s, {a, b}).values();
            CHECK(h[0] == oracle::p1_h0(3 * a + b));
            CHECK(h[1] == oracle::p1_h1(3 * a + b));
        }
}
