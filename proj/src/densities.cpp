#include "ordlim/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

__extension__ using u128 = unsigned __int128;

BigInt to_bigint(u128 v)
{
    static_assert(sizeof(unsigned long) == 8);
    BigInt r(static_cast<unsigned long>(v >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return r;
}

enum class Link : unsigned char { none, below, above };

class MapSearch {
public:
    MapSearch(const FinitePoset& q, const FinitePoset& p, DensityKind kind, bool first_only)
        : q_(q), p_(p), kind_(kind), first_only_(first_only), k_(q.size()), words_(words_for(p.size()))
    {
        const auto dm = degrees(q, Sign::minus);
        const auto dp = degrees(q, Sign::plus);
        order_.resize(k_);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return dm[a] + dp[a] > dm[b] + dp[b]; });
        link_.assign(k_ * k_, Link::none);
        for (std::size_t d = 0; d < k_; ++d)
            for (std::size_t e = 0; e < d; ++e) {
                if (q.less(order_[d], order_[e])) link_[d * k_ + e] = Link::below;
                if (q.less(order_[e], order_[d])) link_[d * k_ + e] = Link::above;
            }
        full_.assign(words_, ~Word{0});
        if (p.size() % 64) full_.back() = (Word{1} << (p.size() % 64)) - 1;
        if (p.size() == 0) full_.clear();
        cand_.assign(k_ * words_, 0);
        image_.assign(k_, 0);
    }

    u128 run()
    {
        if (k_ == 0) return 1;
        if (p_.size() == 0) return 0;
        if (kind_ != DensityKind::hom && k_ > p_.size()) return 0;
        extend(0);
        return count_;
    }

private:
    void extend(std::size_t depth)
    {
        std::span<Word> cand(cand_.data() + depth * words_, words_);
        std::copy(full_.begin(), full_.end(), cand.begin());
        for (std::size_t e = 0; e < depth; ++e) {
            const std::size_t v = image_[e];
            const Link l = link_[depth * k_ + e];
            if (l == Link::below) {
                auto r = p_.predecessors(v);
                for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
            } else if (l == Link::above) {
                auto r = p_.successors(v);
                for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
            } else if (kind_ == DensityKind::ind) {
                auto s = p_.successors(v);
                auto r = p_.predecessors(v);
                for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~(s[w] | r[w]);
            }
            if (kind_ != DensityKind::hom) clear_bit(cand, v);
        }
        if (depth + 1 == k_) {
            count_ += popcount(cand);
            return;
        }
        for (std::size_t w = 0; w < words_; ++w) {
            Word bits = cand[w];
            while (bits) {
                const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                image_[depth] = v;
                extend(depth + 1);
                if (first_only_ && count_ > 0) return;
            }
        }
    }

    const FinitePoset& q_;
    const FinitePoset& p_;
    DensityKind kind_;
    bool first_only_;
    std::size_t k_;
    std::size_t words_;
    std::vector<std::size_t> order_;
    std::vector<Link> link_;
    std::vector<Word> full_;
    std::vector<Word> cand_;
    std::vector<std::size_t> image_;
    u128 count_ = 0;
};

BigInt falling(std::size_t n, std::size_t k)
{
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n - i);
    return r;
}

BigInt power(std::size_t n, std::size_t k)
{
    BigInt r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= static_cast<unsigned long>(n);
    return r;
}

}  // namespace

BigInt count_maps(const FinitePoset& q, const FinitePoset& p, DensityKind kind)
{
    return to_bigint(MapSearch(q, p, kind, false).run());
}

bool has_map(const FinitePoset& q, const FinitePoset& p, DensityKind kind)
{
    return MapSearch(q, p, kind, true).run() > 0;
}

Rational density(const FinitePoset& q, const FinitePoset& p, DensityKind kind)
{
    const std::size_t k = q.size();
    const std::size_t n = p.size();
    if (k == 0) return 1;
    if (n == 0) return 0;
    if (kind != DensityKind::hom && k > n) return 0;
    const BigInt den = kind == DensityKind::hom ? power(n, k) : falling(n, k);
    Rational r(count_maps(q, p, kind), den);
    r.canonicalize();
    return r;
}

std::pair<Rational, Rational> moment_identity_check(const FinitePoset& p, unsigned k, Sign sign)
{
    if (k < 1 || k > 4) throw InputError("moment_identity_check needs 1 <= k <= 4");
    const std::size_t n = p.size();
    if (n == 0) throw EmptySubset("moment_identity_check on an empty poset");
    BigInt sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt d = static_cast<unsigned long>(degree(p, i, sign));
        BigInt t = 1;
        for (unsigned e = 0; e < k; ++e) t *= d;
        sum += t;
    }
    Rational moment(sum, power(n, k + 1));
    moment.canonicalize();
    const FinitePoset star = sign == Sign::minus ? FinitePoset::star_minus(k) : FinitePoset::star_plus(k);
    return {moment, density(star, p, DensityKind::hom)};
}

McEstimate kernel_density_mc(const FinitePoset& q, const KernelModel& w, std::size_t samples, std::uint64_t seed,
                             DensityKind kind, std::size_t threads)
{
    if (samples < 100) throw InputError("kernel_density_mc needs at least 100 samples");
    const std::size_t k = q.size();
    const SeededRng base(seed);
    std::vector<double> values(samples);
    parallel_for(
        samples,
        [&](std::size_t s) {
            const SeededRng pts = base.trial(s).child(tag_points);
            std::vector<KernelPoint> x(k);
            for (std::size_t i = 0; i < k; ++i) x[i] = w.draw(pts, i);
            double prod = 1.0;
            for (std::size_t a = 0; a < k && prod != 0.0; ++a)
                for (std::size_t b = 0; b < k && prod != 0.0; ++b) {
                    if (a == b) continue;
                    const double v = w.value(x[a], x[b]);
                    if (q.less(a, b))
                        prod *= v;
                    else if (kind == DensityKind::ind)
                        prod *= 1.0 - v;
                }
            values[s] = prod;
        },
        threads);
    double sum = 0;
    for (double v : values) sum += v;
    const double mean = sum / static_cast<double>(samples);
    double ss = 0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double var = ss / static_cast<double>(samples - 1);
    return McEstimate{mean, 1.959963984540054 * std::sqrt(var / static_cast<double>(samples))};
}

Rational kernel_density_atomic(const FinitePoset& q, const AtomicMeasure& mu, DensityKind kind)
{
    const auto& atoms = mu.atoms();
    const std::size_t m = atoms.size();
    const std::size_t k = q.size();
    double tuples = 1;
    for (std::size_t i = 0; i < k; ++i) tuples *= static_cast<double>(m);
    if (tuples > 1e7)
        throw BudgetExceeded("kernel_density_atomic: " + std::to_string(m) + "^" + std::to_string(k) +
                             " support tuples exceed the budget of 10^7");
    if (k == 0) return 1;

    auto precedes = [&](std::size_t a, std::size_t b) { return atoms[a].y < atoms[b].x; };
    Rational sum = 0;
    std::vector<std::size_t> idx(k, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < k && ok; ++a)
            for (std::size_t b = 0; b < k && ok; ++b) {
                if (a == b) continue;
                const bool rel = precedes(idx[a], idx[b]);
                if (q.less(a, b))
                    ok = rel;
                else if (kind == DensityKind::ind)
                    ok = !rel;
            }
        if (ok) {
            Rational w = 1;
            for (std::size_t a = 0; a < k; ++a) w *= atoms[idx[a]].w;
            sum += w;
        }
        std::size_t pos = 0;
        while (pos < k && ++idx[pos] == m) idx[pos++] = 0;
        if (pos == k) break;
    }
    return sum;
}

}  // namespace ordlim
