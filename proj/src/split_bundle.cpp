#include "ulrich/split_bundle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ulrich/errors.hpp"

namespace ulrich {

namespace {

// degree -> multiplicity, for assembling large multisets without sorting.
using Counts = std::map<Int, Int>;

SplitBundle expand(const Counts& counts)
{
    std::vector<Int> out;
    for (auto [d, m] : counts)
        out.insert(out.end(), static_cast<std::size_t>(m), d);
    return SplitBundle(std::move(out));
}

Counts convolve(const Counts& a, const Counts& b)
{
    Counts out;
    for (auto [da, ma] : a)
        for (auto [db, mb] : b)
            out[da + db] += ma * mb;
    return out;
}

// Multisets of size k drawn from degs (Sym^k), as degree counts.
Counts sym_counts(const std::vector<Int>& degs, Int k)
{
    if (k < 0)
        return {};
    // layer[s] = counts over multisets of size s from the summands seen so far
    std::vector<Counts> layer(static_cast<std::size_t>(k) + 1);
    layer[0][0] = 1;
    for (Int d : degs) {
        for (Int s = 1; s <= k; ++s)
            for (auto [deg, m] : layer[static_cast<std::size_t>(s - 1)])
                layer[static_cast<std::size_t>(s)][deg + d] += m;
    }
    return layer[static_cast<std::size_t>(k)];
}

// k-element subsets (wedge^k), as degree counts.
Counts wedge_counts(const std::vector<Int>& degs, Int k)
{
    if (k < 0 || k > static_cast<Int>(degs.size()))
        return {};
    std::vector<Counts> layer(static_cast<std::size_t>(k) + 1);
    layer[0][0] = 1;
    for (Int d : degs) {
        for (Int s = k; s >= 1; --s)
            for (auto [deg, m] : layer[static_cast<std::size_t>(s - 1)])
                layer[static_cast<std::size_t>(s)][deg + d] += m;
    }
    return layer[static_cast<std::size_t>(k)];
}

} // namespace

SplitBundle::SplitBundle(std::vector<Int> degrees) : degrees_(std::move(degrees))
{
    std::sort(degrees_.begin(), degrees_.end());
}

SplitBundle::SplitBundle(std::initializer_list<Int> degrees) : SplitBundle(std::vector<Int>(degrees)) {}

Int SplitBundle::degree() const
{
    return std::accumulate(degrees_.begin(), degrees_.end(), Int{0});
}

SplitBundle& SplitBundle::operator+=(const SplitBundle& other)
{
    std::vector<Int> merged;
    merged.reserve(degrees_.size() + other.degrees_.size());
    std::merge(degrees_.begin(), degrees_.end(), other.degrees_.begin(), other.degrees_.end(),
               std::back_inserter(merged));
    degrees_ = std::move(merged);
    return *this;
}

Int p1_cohomology(const SplitBundle& bundle, int i)
{
    Int total = 0;
    if (i == 0) {
        for (Int d : bundle.degrees())
            total += std::max<Int>(d + 1, 0);
    } else if (i == 1) {
        for (Int d : bundle.degrees())
            total += std::max<Int>(-d - 1, 0);
    }
    return total;
}

Int p1_chi(const SplitBundle& bundle)
{
    return bundle.degree() + bundle.rank();
}

SplitBundle dual(const SplitBundle& bundle)
{
    std::vector<Int> out;
    out.reserve(bundle.degrees().size());
    for (Int d : bundle.degrees())
        out.push_back(-d);
    return SplitBundle(std::move(out));
}

SplitBundle twist(const SplitBundle& bundle, Int b)
{
    std::vector<Int> out = bundle.degrees();
    for (Int& d : out)
        d += b;
    return SplitBundle(std::move(out));
}

SplitBundle tensor(const SplitBundle& a, const SplitBundle& b)
{
    std::vector<Int> out;
    out.reserve(a.degrees().size() * b.degrees().size());
    for (Int x : a.degrees())
        for (Int y : b.degrees())
            out.push_back(x + y);
    return SplitBundle(std::move(out));
}

SplitBundle sym_power(const SplitBundle& bundle, Int k)
{
    if (k < 0)
        throw InvalidInput("sym_power: negative exponent");
    return expand(sym_counts(bundle.degrees(), k));
}

SplitBundle wedge_power(const SplitBundle& bundle, Int k)
{
    if (k < 0)
        throw InvalidInput("wedge_power: negative exponent");
    return expand(wedge_counts(bundle.degrees(), k));
}

SplitBundle hook_schur(const SplitBundle& bundle, Int m, Int p)
{
    if (m < 1)
        throw InvalidInput("hook_schur: first row length must be positive");
    if (p < 0)
        throw InvalidInput("hook_schur: negative leg length");
    const auto& d = bundle.degrees();
    const auto r = d.size();
    Counts total;
    // Corner letter x; the leg is a p-subset of letters > x, the rest of the
    // arm is a multiset of size m-1 from letters >= x.
    for (std::size_t x = 0; x < r; ++x) {
        std::vector<Int> above(d.begin() + static_cast<std::ptrdiff_t>(x) + 1, d.end());
        std::vector<Int> from(d.begin() + static_cast<std::ptrdiff_t>(x), d.end());
        Counts leg = wedge_counts(above, p);
        if (leg.empty())
            continue;
        Counts cells = convolve(leg, sym_counts(from, m - 1));
        for (auto [deg, mult] : cells)
            total[deg + d[x]] += mult;
    }
    return expand(total);
}

} // namespace ulrich
