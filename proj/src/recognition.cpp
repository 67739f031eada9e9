#include "ordlim/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "ordlim/densities.hpp"
#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

bool row_subset(std::span<const Word> a, std::span<const Word> b)
{
    for (std::size_t w = 0; w < a.size(); ++w)
        if (a[w] & ~b[w]) return false;
    return true;
}

std::vector<std::size_t> rank_order(const FinitePoset& p)
{
    const auto dm = degrees(p, Sign::minus);
    const auto dp = degrees(p, Sign::plus);
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (dm[x] != dm[y]) return dm[x] < dm[y];
        if (dp[x] != dp[y]) return dp[x] > dp[y];
        return x < y;
    });
    return order;
}

}  // namespace

bool is_interval_order(const FinitePoset& p) { return !has_map(FinitePoset::two_plus_two(), p, DensityKind::ind); }

bool downset_chain_check(const FinitePoset& p)
{
    const auto order = rank_order(p);
    for (std::size_t k = 1; k < order.size(); ++k)
        if (!row_subset(p.predecessors(order[k - 1]), p.predecessors(order[k]))) return false;
    return true;
}

bool is_semiorder(const FinitePoset& p)
{
    return is_interval_order(p) && !has_map(FinitePoset::three_plus_one(), p, DensityKind::ind);
}

bool semiorder_rank_check(const FinitePoset& p)
{
    const auto order = rank_order(p);
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (!row_subset(p.predecessors(order[k - 1]), p.predecessors(order[k]))) return false;
        if (!row_subset(p.successors(order[k]), p.successors(order[k - 1]))) return false;
    }
    return true;
}

bool realizes(const IntervalRepresentation& r, const FinitePoset& p)
{
    if (r.n != p.size() || r.a.size() != r.n || r.b.size() != r.n) return false;
    for (std::size_t i = 0; i < r.n; ++i) {
        if (r.a[i] > r.b[i]) return false;
        for (std::size_t j = 0; j < r.n; ++j)
            if (p.less(i, j) != (r.b[i] < r.a[j])) return false;
    }
    return true;
}

IntervalRepresentation interval_representation(const FinitePoset& p)
{
    if (!downset_chain_check(p)) throw NotIntervalOrder("poset contains an induced 2+2");
    const std::size_t n = p.size();
    const auto order = rank_order(p);
    IntervalRepresentation r;
    r.n = n;
    r.rank.resize(n);
    for (std::size_t k = 0; k < n; ++k) r.rank[order[k]] = k + 1;
    r.a.resize(n);
    r.b.resize(n);
    for (std::size_t x = 0; x < n; ++x) {
        r.a[x] = Rational(static_cast<unsigned long>(r.rank[x]), static_cast<unsigned long>(n));
        std::size_t m = n + 1;
        for_each_bit(p.successors(x), [&](std::size_t y) { m = std::min(m, r.rank[y]); });
        r.b[x] = m == n + 1 ? Rational(1) : Rational(static_cast<unsigned long>(m - 1), static_cast<unsigned long>(n));
        r.a[x].canonicalize();
        r.b[x].canonicalize();
    }
    if (!realizes(r, p)) throw InternalInvariantError("interval representation does not realize the poset");
    if (semiorder_rank_check(p)) {
        for (std::size_t k = 1; k < n; ++k)
            if (r.b[order[k - 1]] > r.b[order[k]])
                throw InternalInvariantError("semiorder representation has decreasing right endpoints");
    }
    return r;
}

AtomicMeasure empirical_measure(const IntervalRepresentation& r)
{
    std::vector<Atom> atoms;
    const Rational w(1UL, static_cast<unsigned long>(r.n));
    for (std::size_t i = 0; i < r.n; ++i) atoms.push_back(Atom{r.a[i], r.b[i], w});
    return AtomicMeasure::from_atoms(std::move(atoms));
}

StepKernelMeasure as_step_measure(const IntervalRepresentation& r) { return left_uniformize(empirical_measure(r)); }

}  // namespace ordlim
