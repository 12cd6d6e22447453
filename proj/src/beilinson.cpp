#include "ulrich/beilinson.hpp"

#include <set>

#include "ulrich/errors.hpp"
#include "ulrich/hom_ext.hpp"
#include "ulrich/rel_diff.hpp"

namespace ulrich {

std::pair<Int, Int> sigma(Int i)
{
    Int s2 = (i >= 0) ? i / 2 : -((-i + 1) / 2);
    return {i - s2, s2};
}

std::pair<Collection, Collection> build_collections(const ScrollData& s)
{
    const int n = s.n();
    if (n < 1)
        throw InvalidInput("exceptional collections need a scroll of dimension at least 2");
    Collection e{'E', {}};
    e.members.push_back({Atom::line({0, 0}), 0});
    e.members.push_back({Atom::line(from_pair(-1, 0)), 0});
    for (int j = 2; j <= 2 * n + 1; ++j) {
        auto [s1, s2] = sigma(1 - j);
        e.members.push_back({Atom::line(from_pair(s1, s2)), static_cast<int>(s2)});
    }

    Collection f{'F', {}};
    f.members.push_back({Atom::line({0, 0}), 0});
    f.members.push_back({Atom::line(from_pair(-1, 0)), 0});
    for (int i = 1; i <= n - 1; ++i) {
        f.members.push_back({omega_atom(s, i, from_pair(i - 1, i)), 0});
        f.members.push_back({omega_atom(s, i, from_pair(i - 2, i)), 0});
    }
    f.members.push_back({Atom::line(from_pair(s.c() - 2, -1)), 0});
    f.members.push_back({Atom::line(from_pair(s.c() - 3, -1)), 0});
    return {e, f};
}

DualityReport verify_duality(const ScrollData& s)
{
    auto [e, f] = build_collections(s);
    return verify_duality(s, e, f);
}

DualityReport verify_duality(const ScrollData& s, const Collection& e, const Collection& f)
{
    const int size = static_cast<int>(e.size());
    DualityReport report;
    report.dims.assign(e.size(), std::vector<std::vector<Int>>(f.size(), std::vector<Int>(e.size(), 0)));
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < static_cast<int>(f.size()); ++j) {
            ExtTable ext = ext_line_vs_atom(s, e[i].sheaf.twist, e[i].shift, f[j].sheaf);
            for (int k = ext.first; k <= ext.last(); ++k) {
                Int v = ext.at(k).value();
                Int expected = (i == j && j == k) ? 1 : 0;
                if (k >= 0 && k < size)
                    report.dims[i][j][k] = v;
                if (v != expected)
                    report.violations.push_back({i, j, k, v});
            }
            if (i == j && (i < ext.first || i > ext.last()))
                report.violations.push_back({i, j, i, 0});
        }
    }
    report.pass = report.violations.empty();
    return report;
}

Int BeilinsonTable::at(int j, int q) const
{
    if (j < 0 || j >= size() || q < 0 || q >= size())
        return 0;
    return entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(q)];
}

bool BeilinsonTable::is_zero() const
{
    for (const auto& col : entries)
        for (Int v : col)
            if (v != 0)
                return false;
    return true;
}

std::vector<std::string> collection_labels(const Collection& c)
{
    std::vector<std::string> out;
    for (const auto& m : c.members)
        out.push_back(to_string(m.sheaf));
    return out;
}

namespace {

BeilinsonTable empty_table(const ScrollData& s)
{
    auto [e, f] = build_collections(s);
    BeilinsonTable t;
    t.entries.assign(e.size(), std::vector<Int>(e.size(), 0));
    t.f_labels = collection_labels(f);
    t.e_labels = collection_labels(e);
    return t;
}

} // namespace

BeilinsonTable beilinson_table(const ScrollData& s, const FormalSheaf& a)
{
    if (!a.is_effective())
        throw InvalidInput("Beilinson table needs an effective sheaf");
    auto [e, f] = build_collections(s);
    BeilinsonTable t = empty_table(s);
    const int size = t.size();
    for (int j = 0; j < size; ++j) {
        CohomTable h = sheaf_cohomology(s, a.twisted(e[j].sheaf.twist));
        if (!h.is_exact())
            throw Indeterminate("Beilinson column " + std::to_string(j) + " is not exact");
        for (int q = 0; q < size; ++q)
            t.entries[j][q] = h.at(q + e[j].shift).value();
        // nothing may fall outside the square
        for (int d = 0; d <= h.top_degree(); ++d) {
            int q = d - e[j].shift;
            if ((q < 0 || q >= size) && h.at(d).value() != 0)
                throw std::logic_error("Beilinson entry outside the square");
        }
    }
    return t;
}

BeilinsonTable beilinson_table(const ScrollData& s, const Profile& profile)
{
    if (profile.n != s.n())
        throw InvalidInput("profile is for n = " + std::to_string(profile.n) + ", scroll has n = " +
                           std::to_string(s.n()));
    BeilinsonTable t = empty_table(s);
    std::set<std::pair<int, int>> seen;
    for (const auto& en : profile.entries) {
        if (en.j < 0 || en.j >= t.size() || en.q < 0 || en.q >= t.size())
            throw InvalidInput("profile entry (" + std::to_string(en.j) + "," + std::to_string(en.q) +
                               ") outside the table");
        if (en.h < 0)
            throw InvalidInput("profile entries must be non-negative");
        if (!seen.insert({en.j, en.q}).second)
            throw InvalidInput("duplicate profile entry");
        t.entries[en.j][en.q] = en.h;
    }
    return t;
}

std::vector<Int> diagonal_type(const BeilinsonTable& t)
{
    const int size = t.size();
    if (size < 4 || size % 2 != 0)
        throw InvalidInput("not a scroll Beilinson table");
    const int n = size / 2 - 1;
    auto carries_block = [n](int j) { return j == 1 || (j % 2 == 0 && j >= 2 && j <= 2 * n); };
    for (int j = 0; j < size; ++j) {
        for (int q = 0; q < size; ++q) {
            Int v = t.at(j, q);
            if (v == 0)
                continue;
            if (q != j)
                throw NotUlrich("not Ulrich-diagonal: m[" + std::to_string(j) + "][" + std::to_string(q) +
                                "] = " + std::to_string(v) + " is off the diagonal");
            if (!carries_block(j))
                throw NotUlrich("not Ulrich-diagonal: diagonal slot " + std::to_string(j) +
                                " carries no building block but has value " + std::to_string(v));
        }
    }
    std::vector<Int> a(static_cast<std::size_t>(n) + 1);
    a[0] = t.at(1, 1);
    for (int i = 1; i <= n; ++i)
        a[static_cast<std::size_t>(i)] = t.at(2 * i, 2 * i);
    return a;
}

} // namespace ulrich
