// Brute-force references used only by the tests. Nothing here calls the
// library's cohomology code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Int = std::int64_t;

// Generalized binomial: x (x-1) ... (x-k+1) / k! for any integer x.
inline Int poly_binom(Int x, int k)
{
    if (k < 0)
        return 0;
    Int num = 1;
    for (int i = 0; i < k; ++i)
        num = num * (x - i) / (i + 1);
    return num;
}

inline Int binom(Int n, Int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    return poly_binom(n, static_cast<int>(k));
}

// Degrees of all size-k multisets of summands.
inline std::vector<Int> sym(const std::vector<Int>& degs, int k)
{
    std::vector<Int> out;
    std::function<void(std::size_t, int, Int)> rec = [&](std::size_t from, int left, Int acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = from; i < degs.size(); ++i)
            rec(i, left - 1, acc + degs[i]);
    };
    if (k >= 0)
        rec(0, k, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Int> wedge(const std::vector<Int>& degs, int k)
{
    std::vector<Int> out;
    std::function<void(std::size_t, int, Int)> rec = [&](std::size_t from, int left, Int acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (std::size_t i = from; i < degs.size(); ++i)
            rec(i + 1, left - 1, acc + degs[i]);
    };
    if (k >= 0)
        rec(0, k, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Semistandard fillings of the hook (m, 1^p): row weakly increasing, first
// column strictly increasing; one weight per tableau.
inline std::vector<Int> hook_ssyt(const std::vector<Int>& degs, int m, int p)
{
    const int r = static_cast<int>(degs.size());
    std::vector<Int> out;
    std::vector<int> row(static_cast<std::size_t>(m)), col(static_cast<std::size_t>(p));
    std::function<void(int)> fill_col;
    std::function<void(int)> fill_row = [&](int i) {
        if (i == m) {
            fill_col(0);
            return;
        }
        for (int v = (i ? row[i - 1] : 0); v < r; ++v) {
            row[i] = v;
            fill_row(i + 1);
        }
    };
    fill_col = [&](int i) {
        if (i == p) {
            Int w = 0;
            for (int v : row)
                w += degs[v];
            for (int v : col)
                w += degs[v];
            out.push_back(w);
            return;
        }
        for (int v = (i ? col[i - 1] : row[0]) + 1; v < r; ++v) {
            col[i] = v;
            fill_col(i + 1);
        }
    };
    fill_row(0);
    std::sort(out.begin(), out.end());
    return out;
}

inline Int p1_h0(Int d) { return std::max<Int>(d + 1, 0); }
inline Int p1_h1(Int d) { return std::max<Int>(-d - 1, 0); }

// chi(O_S(aH + bF)) on a scroll of dimension n+1 and degree c, as the
// polynomial sum over monomials of (deg + b + 1).
inline Int chi_line(int n, Int c, Int a, Int b)
{
    return (b + 1) * poly_binom(a + n, n) + c * poly_binom(a + n, n + 1);
}

// h^0(O_S(aH + bF)) by summing over degree-a monomials in n+1 variables.
inline Int h0_line(const std::vector<Int>& degs, Int a, Int b)
{
    if (a < 0)
        return 0;
    Int total = 0;
    for (Int d : sym(degs, static_cast<int>(a)))
        total += p1_h0(d + b);
    return total;
}

// h^q(P^n, Omega^p(k)) from the closed form of Bott's formula.
inline std::vector<Int> bott(int n, int p, Int k)
{
    std::vector<Int> h(static_cast<std::size_t>(n) + 1, 0);
    if (p < 0 || p > n)
        return h;
    if (k > p)
        h[0] = binom(k + n - p, k) * binom(k - 1, p);
    if (k == 0)
        h[static_cast<std::size_t>(p)] = 1;
    if (k < p - n) {
        Int kk = -k;
        int pp = n - p;
        h[static_cast<std::size_t>(n)] = binom(kk + n - pp, kk) * binom(kk - 1, pp);
    }
    return h;
}

// h^q of Omega^p_{S|P^1}(aH + bF) on S(1,...,1) = P^1 x P^n, where the sheaf
// is O(a+b) boxed with Omega^p_{P^n}(a); Kunneth.
inline std::vector<Int> segre_omega(int n, int p, Int a, Int b)
{
    std::vector<Int> out(static_cast<std::size_t>(n) + 2, 0);
    std::vector<Int> fib = bott(n, p, a);
    Int h0 = p1_h0(a + b), h1 = p1_h1(a + b);
    for (int j = 0; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] += h0 * fib[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(j) + 1] += h1 * fib[static_cast<std::size_t>(j)];
    }
    return out;
}

// Degree lists a_0 <= ... <= a_n with all a_i >= 1, n in [n_lo, n_hi], sum <= c_max.
inline std::vector<std::vector<Int>> scrolls(int n_lo, int n_hi, Int c_max)
{
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur;
    std::function<void(int, Int, Int)> rec = [&](int left, Int lo, Int budget) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (Int a = lo; a * left <= budget; ++a) {
            cur.push_back(a);
            rec(left - 1, a, budget - a);
            cur.pop_back();
        }
    };
    for (int n = n_lo; n <= n_hi; ++n)
        rec(n + 1, 1, c_max);
    return out;
}

} // namespace oracle
