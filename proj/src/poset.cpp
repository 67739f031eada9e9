#include "ordlim/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ordlim/errors.hpp"

namespace ordlim {

FinitePoset::FinitePoset(BitMatrix rel, Trusted) : rel_(std::move(rel)), inv_(rel_.transposed()) {}

FinitePoset make_trusted_poset(BitMatrix rel) { return FinitePoset(std::move(rel), FinitePoset::Trusted{}); }

OrderDefect check_strict_order(const BitMatrix& rel)
{
    const std::size_t n = rel.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rel.test(i, i)) return OrderDefect::reflexive;
    for (std::size_t i = 0; i < n; ++i) {
        bool symmetric = false;
        for_each_bit(rel.row(i), [&](std::size_t j) { symmetric = symmetric || rel.test(j, i); });
        if (symmetric) return OrderDefect::asymmetric;
    }
    // succ(j) must be contained in succ(i) whenever i < j.
    for (std::size_t i = 0; i < n; ++i) {
        auto ri = rel.row(i);
        bool closed = true;
        for_each_bit(ri, [&](std::size_t j) {
            if (!closed) return;
            auto rj = rel.row(j);
            for (std::size_t w = 0; w < rel.words(); ++w)
                if (rj[w] & ~ri[w]) {
                    closed = false;
                    return;
                }
        });
        if (!closed) return OrderDefect::intransitive;
    }
    return OrderDefect::none;
}

FinitePoset FinitePoset::from_relations(std::size_t n, std::span<const Pair> pairs)
{
    BitMatrix rel(n);
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n)
            throw InputError("relation (" + std::to_string(i) + ", " + std::to_string(j) +
                             ") out of range for n = " + std::to_string(n));
        if (i == j) throw CycleError("relation " + std::to_string(i) + " < itself");
        rel.set(i, j);
    }
    // Warshall with bit rows.
    for (std::size_t k = 0; k < n; ++k) {
        auto rk = rel.row(k);
        for (std::size_t i = 0; i < n; ++i) {
            if (!rel.test(i, k)) continue;
            auto ri = rel.row(i);
            for (std::size_t w = 0; w < rel.words(); ++w) ri[w] |= rk[w];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (rel.test(i, i)) throw CycleError("relations contain a cycle through point " + std::to_string(i));
    return FinitePoset(std::move(rel), Trusted{});
}

FinitePoset FinitePoset::from_matrix(BitMatrix rel)
{
    switch (check_strict_order(rel)) {
    case OrderDefect::none: break;
    case OrderDefect::reflexive: throw CycleError("relation is reflexive");
    case OrderDefect::asymmetric: throw CycleError("relation is not antisymmetric");
    case OrderDefect::intransitive: throw NotTransitive("relation is not transitive");
    }
    return FinitePoset(std::move(rel), Trusted{});
}

FinitePoset FinitePoset::from_intervals(std::span<const double> left, std::span<const double> right)
{
    if (left.size() != right.size()) throw InputError("interval endpoint arrays differ in length");
    const std::size_t n = left.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!(left[i] <= right[i]))
            throw NotTransitive("interval " + std::to_string(i) + " has right endpoint below left endpoint");

    // Sorting by left endpoint makes each successor set a suffix of the order.
    std::vector<std::size_t> by_left(n);
    std::iota(by_left.begin(), by_left.end(), std::size_t{0});
    std::sort(by_left.begin(), by_left.end(), [&](std::size_t a, std::size_t b) { return left[a] < left[b]; });
    std::vector<double> sorted_left(n);
    for (std::size_t k = 0; k < n; ++k) sorted_left[k] = left[by_left[k]];

    BitMatrix rel(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto first = std::upper_bound(sorted_left.begin(), sorted_left.end(), right[i]);
        auto row = rel.row(i);
        for (auto it = first; it != sorted_left.end(); ++it)
            set_bit(row, by_left[static_cast<std::size_t>(it - sorted_left.begin())]);
    }
    return FinitePoset(std::move(rel), Trusted{});
}

FinitePoset FinitePoset::chain(std::size_t n)
{
    BitMatrix rel(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rel.set(i, j);
    return FinitePoset(std::move(rel), Trusted{});
}

FinitePoset FinitePoset::antichain(std::size_t n) { return FinitePoset(BitMatrix(n), Trusted{}); }

FinitePoset FinitePoset::two_plus_two()
{
    const Pair pairs[] = {{0, 1}, {2, 3}};
    return from_relations(4, pairs);
}

FinitePoset FinitePoset::three_plus_one()
{
    const Pair pairs[] = {{0, 1}, {1, 2}};
    return from_relations(4, pairs);
}

FinitePoset FinitePoset::star_minus(std::size_t k)
{
    BitMatrix rel(k + 1);
    for (std::size_t i = 0; i < k; ++i) rel.set(i, k);
    return FinitePoset(std::move(rel), Trusted{});
}

FinitePoset FinitePoset::star_plus(std::size_t k)
{
    BitMatrix rel(k + 1);
    for (std::size_t i = 1; i <= k; ++i) rel.set(0, i);
    return FinitePoset(std::move(rel), Trusted{});
}

std::vector<Pair> FinitePoset::covers() const
{
    std::vector<Pair> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for_each_bit(successors(i), [&](std::size_t j) {
            // i < j is a cover unless some k has i < k < j.
            auto si = successors(i);
            auto pj = predecessors(j);
            bool between = false;
            for (std::size_t w = 0; w < rel_.words() && !between; ++w) between = (si[w] & pj[w]) != 0;
            if (!between) out.emplace_back(i, j);
        });
    }
    return out;
}

FinitePoset reflect(const FinitePoset& p) { return make_trusted_poset(p.matrix().transposed()); }

FinitePoset induced(const FinitePoset& p, std::span<const std::size_t> points)
{
    if (points.empty()) throw EmptySubset("induced subposet of an empty point set");
    const std::size_t m = points.size();
    BitMatrix rel(m);
    for (std::size_t a = 0; a < m; ++a) {
        if (points[a] >= p.size()) throw InputError("induced: point index out of range");
        for (std::size_t b = 0; b < m; ++b)
            if (p.less(points[a], points[b])) rel.set(a, b);
    }
    // A repeated index would make the result reflexive-free but not an order
    // on distinct points; reject it.
    std::vector<std::size_t> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("induced: repeated point index");
    return make_trusted_poset(std::move(rel));
}

std::size_t degree(const FinitePoset& p, std::size_t i, Sign sign)
{
    return popcount(sign == Sign::minus ? p.predecessors(i) : p.successors(i));
}

std::vector<std::size_t> degrees(const FinitePoset& p, Sign sign)
{
    std::vector<std::size_t> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = degree(p, i, sign);
    return out;
}

namespace {

// Backtracking over order isomorphisms p -> q, pruned by (d-, d+) profiles.
class IsoSearch {
public:
    IsoSearch(const FinitePoset& p, const FinitePoset& q, bool first_only)
        : p_(p), q_(q), first_only_(first_only), map_(p.size()), used_(q.size(), false)
    {
        const std::size_t n = p.size();
        pdm_ = degrees(p, Sign::minus);
        pdp_ = degrees(p, Sign::plus);
        qdm_ = degrees(q, Sign::minus);
        qdp_ = degrees(q, Sign::plus);
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return pdm_[a] + pdp_[a] > pdm_[b] + pdp_[b];
        });
    }

    std::size_t run()
    {
        if (p_.size() != q_.size()) return 0;
        if (p_.relation_count() != q_.relation_count()) return 0;
        auto a = pdm_, b = qdm_, c = pdp_, d = qdp_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        std::sort(c.begin(), c.end());
        std::sort(d.begin(), d.end());
        if (a != b || c != d) return 0;
        extend(0);
        return found_;
    }

private:
    void extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            ++found_;
            return;
        }
        const std::size_t x = order_[depth];
        for (std::size_t y = 0; y < q_.size(); ++y) {
            if (used_[y] || qdm_[y] != pdm_[x] || qdp_[y] != pdp_[x]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const std::size_t xp = order_[k];
                const std::size_t yp = map_[xp];
                ok = p_.less(x, xp) == q_.less(y, yp) && p_.less(xp, x) == q_.less(yp, y);
            }
            if (!ok) continue;
            map_[x] = y;
            used_[y] = true;
            extend(depth + 1);
            used_[y] = false;
            if (first_only_ && found_ > 0) return;
        }
    }

    const FinitePoset& p_;
    const FinitePoset& q_;
    bool first_only_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> pdm_, pdp_, qdm_, qdp_;
    std::size_t found_ = 0;
};

}  // namespace

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) { return IsoSearch(p, q, true).run() > 0; }

std::size_t automorphism_count(const FinitePoset& p) { return IsoSearch(p, p, false).run(); }

}  // namespace ordlim
