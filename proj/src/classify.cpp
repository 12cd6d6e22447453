#include "ulrich/classify.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "ulrich/errors.hpp"
#include "ulrich/rel_diff.hpp"

namespace ulrich {

UlrichType parse_type(const std::string& text, int n)
{
    UlrichType t;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw InvalidInput("bad type entry '" + item + "'");
        }
        while (used < item.size() && item[used] == ' ')
            ++used;
        if (used != item.size())
            throw InvalidInput("bad type entry '" + item + "'");
        if (v < 0)
            throw InvalidInput("type entries must be non-negative");
        t.a.push_back(v);
    }
    if (static_cast<int>(t.a.size()) != n + 1)
        throw InvalidInput("type needs " + std::to_string(n + 1) + " entries, got " + std::to_string(t.a.size()));
    bool any = false;
    for (Int v : t.a)
        any = any || v > 0;
    if (!any)
        throw InvalidInput("type must not be all zero");
    return t;
}

FormalSheaf block(const ScrollData& s, int i)
{
    if (i < 0 || i > s.n())
        throw InvalidInput("block index " + std::to_string(i) + " outside 0.." + std::to_string(s.n()));
    return FormalSheaf(omega_atom(s, i, from_pair(i, i + 1)));
}

FormalSheaf block_sum(const ScrollData& s, const UlrichType& t)
{
    if (static_cast<int>(t.a.size()) != s.n() + 1)
        throw InvalidInput("type length does not match the scroll");
    FormalSheaf out;
    for (int i = 0; i <= s.n(); ++i) {
        if (t.a[i] < 0)
            throw InvalidInput("negative multiplicity in type");
        if (t.a[i] > 0)
            for (const auto& [atom, m] : block(s, i).terms())
                out.add(atom, m * t.a[i]);
    }
    return out;
}

UlrichVerdict is_ulrich(const ScrollData& s, const FormalSheaf& v)
{
    if (!v.is_effective())
        throw InvalidInput("Ulrich test needs non-negative multiplicities");
    UlrichVerdict out;
    out.rank = rank(s, v);
    if (out.rank == 0)
        out.failures.push_back("zero sheaf");
    for (int j = 1; j <= s.n() + 1; ++j) {
        CohomTable h = sheaf_cohomology(s, v.twisted({-j, 0}));
        if (!h.is_zero()) {
            std::string detail;
            for (int q = 0; q <= h.top_degree(); ++q)
                detail += (q ? "," : "") + to_string(h.at(q));
            out.failures.push_back("H^*(V(-" + std::to_string(j) + "H)) = [" + detail + "]");
        }
        out.twists.push_back(std::move(h));
    }
    CohomTable h = sheaf_cohomology(s, v);
    out.h0 = h.at(0).value();
    out.h0_minus_h = out.twists.front().at(0).value();
    if (out.h0 != s.c() * out.rank)
        out.failures.push_back("h0 = " + std::to_string(out.h0) + " but c*rank = " +
                               std::to_string(s.c() * out.rank));
    if (out.h0_minus_h != 0)
        out.failures.push_back("h0(V(-H)) = " + std::to_string(out.h0_minus_h));
    out.pass = out.failures.empty();
    return out;
}

UlrichType classify(const ScrollData& s, const FormalSheaf& v)
{
    UlrichVerdict verdict = is_ulrich(s, v);
    if (!verdict.pass)
        throw NotUlrich("not Ulrich: " + verdict.failures.front());
    return {diagonal_type(beilinson_table(s, v.twisted({-1, 0})))};
}

UlrichType classify(const ScrollData& s, const Profile& profile)
{
    UlrichType t{diagonal_type(beilinson_table(s, profile))};
    bool any = false;
    for (Int v : t.a)
        any = any || v > 0;
    if (!any)
        throw NotUlrich("zero profile has no type");
    return t;
}

TypeInfo describe_type(const ScrollData& s, const UlrichType& t)
{
    FormalSheaf v = block_sum(s, t);
    SlopeData d = deg_slope(s, v);
    TypeInfo info;
    info.type = t;
    info.rank = d.rank;
    info.c1 = d.c1;
    info.h0 = s.c() * d.rank;
    info.slope = d.slope;
    for (int i = 0; i <= s.n(); ++i)
        if (binomial(s.n(), i) == 1)
            info.line_blocks.push_back(i);
    return info;
}

std::vector<TypeInfo> enumerate_types_by_rank(const ScrollData& s, Int r)
{
    if (r < 1)
        throw InvalidInput("rank must be positive");
    const int n = s.n();
    std::vector<TypeInfo> out;
    std::vector<Int> a(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, Int)> rec = [&](int i, Int left) {
        if (i == n + 1) {
            if (left == 0)
                out.push_back(describe_type(s, {a}));
            return;
        }
        Int w = binomial(n, i);
        for (Int k = 0; k * w <= left; ++k) {
            a[i] = k;
            rec(i + 1, left - k * w);
        }
        a[i] = 0;
    };
    rec(0, r);
    return out;
}

std::vector<TypeInfo> enumerate_types_by_h0(const ScrollData& s, Int h0)
{
    if (h0 < 1)
        throw InvalidInput("h0 must be positive");
    if (h0 % s.c() != 0)
        return {};
    return enumerate_types_by_rank(s, h0 / s.c());
}

namespace {

void check_dim(int dim)
{
    if (dim != 2 && dim != 3)
        throw InvalidInput("Veronese tables exist for dim 2 and 3 only");
}

BeilinsonTable veronese_frame(int dim)
{
    BeilinsonTable t;
    t.entries.assign(dim + 1, std::vector<Int>(dim + 1, 0));
    for (int j = 0; j <= dim; ++j) {
        t.e_labels.push_back(j == 0 ? "O" : "O(-" + std::to_string(j) + ")");
        if (j == 0)
            t.f_labels.push_back("O");
        else if (j == dim)
            t.f_labels.push_back("O(-1)");
        else
            t.f_labels.push_back("Omega^" + std::to_string(j) + "(" + std::to_string(j) + ")");
    }
    return t;
}

} // namespace

BeilinsonTable veronese_table(int dim, const Profile& profile)
{
    check_dim(dim);
    if (profile.n != dim)
        throw InvalidInput("profile dimension does not match");
    BeilinsonTable t = veronese_frame(dim);
    std::set<std::pair<int, int>> seen;
    for (const auto& e : profile.entries) {
        if (e.j < 0 || e.j > dim || e.q < 0 || e.q > dim)
            throw InvalidInput("profile entry outside the table");
        if (e.h < 0)
            throw InvalidInput("profile entries must be non-negative");
        if (!seen.insert({e.j, e.q}).second)
            throw InvalidInput("duplicate profile entry");
        t.entries[e.j][e.q] = e.h;
    }
    return t;
}

BeilinsonTable veronese_table(int dim, int p, Int k)
{
    check_dim(dim);
    if (p < 0 || p > dim)
        throw InvalidInput("p outside 0..dim");
    BeilinsonTable t = veronese_frame(dim);
    for (int j = 0; j <= dim; ++j) {
        CohomTable h = pn_omega_cohomology(dim, p, k - j);
        for (int q = 0; q <= dim; ++q)
            t.entries[j][q] = h.at(q).value();
    }
    return t;
}

DualityReport verify_veronese_duality(int dim)
{
    check_dim(dim);
    DualityReport report;
    report.dims.assign(dim + 1, std::vector<std::vector<Int>>(dim + 1, std::vector<Int>(dim + 1, 0)));
    for (int i = 0; i <= dim; ++i) {
        for (int j = 0; j <= dim; ++j) {
            // O(-i) (x) Omega^j(j)
            CohomTable h = pn_omega_cohomology(dim, j, j - i);
            for (int q = 0; q <= dim; ++q) {
                Int v = h.at(q).value();
                report.dims[i][j][q] = v;
                if (v != ((i == j && j == q) ? 1 : 0))
                    report.violations.push_back({i, j, q, v});
            }
        }
    }
    report.pass = report.violations.empty();
    return report;
}

std::vector<Int> veronese_diagonal(const BeilinsonTable& t)
{
    const int dim = t.size() - 1;
    check_dim(dim);
    for (int j = 0; j <= dim; ++j) {
        for (int q = 0; q <= dim; ++q) {
            Int v = t.at(j, q);
            if (v == 0)
                continue;
            if (q != j || j == 0 || j == dim)
                throw NotUlrich("nonzero entry m[" + std::to_string(j) + "][" + std::to_string(q) + "] = " +
                                std::to_string(v) + " outside the inner diagonal");
        }
    }
    std::vector<Int> out;
    for (int j = 1; j < dim; ++j)
        out.push_back(t.at(j, j));
    return out;
}

} // namespace ulrich
