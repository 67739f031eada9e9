#include "ordlim/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

#include "ordlim/errors.hpp"
#include "ordlim/recognition.hpp"

namespace ordlim {

FinitePoset sample_kernel_poset(const KernelModel& w, std::size_t n, const SeededRng& rng)
{
    if (n == 0) throw InputError("sample size must be at least 1");
    const SeededRng pts = rng.child(tag_points);
    std::vector<KernelPoint> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = w.draw(pts, i);

    if (w.has_interval_form()) {
        std::vector<double> left(n), right(n);
        for (std::size_t i = 0; i < n; ++i) std::tie(left[i], right[i]) = w.interval(x[i]);
        return FinitePoset::from_intervals(left, right);
    }

    const SeededRng pairs = rng.child(tag_pairs);
    BitMatrix rel(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double v = w.value(x[i], x[j]);
            const bool related = w.indicator() ? v >= 1.0 : pairs.uniform(i * n + j) < v;
            if (related) rel.set(i, j);
        }
    try {
        return FinitePoset::from_matrix(std::move(rel));
    } catch (const InputError& e) {
        throw NotTransitive(std::string("kernel ") + w.name() + " produced a non-order: " + e.what());
    }
}

FinitePoset sample_interval_poset(const MixedMeasure& mu, std::size_t n, const SeededRng& rng)
{
    return sample_kernel_poset(KernelModel::measure(mu), n, rng);
}

FinitePoset sample_interval_poset(const StepKernelMeasure& mu, std::size_t n, const SeededRng& rng)
{
    return sample_interval_poset(to_mixed(mu), n, rng);
}

FinitePoset sample_interval_poset(const AtomicMeasure& mu, std::size_t n, const SeededRng& rng)
{
    return sample_interval_poset(to_mixed(mu), n, rng);
}

StepCDF nu_empirical(const FinitePoset& p, Sign sign)
{
    const std::size_t n = p.size();
    if (n == 0) throw EmptySubset("nu_empirical of an empty poset");
    std::vector<std::size_t> count(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) ++count[degree(p, i, sign)];
    std::vector<std::pair<Rational, Rational>> atoms;
    for (std::size_t d = 0; d <= n; ++d)
        if (count[d])
            atoms.emplace_back(Rational(static_cast<unsigned long>(d), static_cast<unsigned long>(n)),
                               Rational(static_cast<unsigned long>(count[d]), static_cast<unsigned long>(n)));
    for (auto& [x, w] : atoms) {
        x.canonicalize();
        w.canonicalize();
    }
    return StepCDF::from_atoms(atoms);
}

namespace {

// Bit for the ordered pair (a, b), a != b, of a k-point labelled poset.
inline unsigned pair_bit(std::size_t a, std::size_t b, std::size_t k)
{
    return static_cast<unsigned>(a * (k - 1) + (b > a ? b - 1 : b));
}

// For each k <= 5, catalog id of every labelled poset on k points, indexed by
// its relation mask.
struct LabelledTable {
    std::vector<std::vector<std::int32_t>> id;  // id[k][mask], -1 if not an order
    LabelledTable()
    {
        const auto& cat = standard_catalog();
        id.resize(6);
        for (std::size_t k = 1; k <= 5; ++k) {
            id[k].assign(std::size_t{1} << (k * (k - 1)), -1);
            for (const CatalogEntry* e : cat.of_size(k)) {
                std::vector<std::size_t> perm(k);
                std::iota(perm.begin(), perm.end(), std::size_t{0});
                do {
                    std::uint32_t mask = 0;
                    for (std::size_t a = 0; a < k; ++a)
                        for (std::size_t b = 0; b < k; ++b)
                            if (a != b && e->poset.less(perm[a], perm[b])) mask |= 1U << pair_bit(a, b, k);
                    id[k][mask] = static_cast<std::int32_t>(e->id);
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
};

const LabelledTable& labelled_table()
{
    static const LabelledTable t;
    return t;
}

std::uint32_t tuple_mask(const FinitePoset& p, const std::size_t* pts, std::size_t k)
{
    std::uint32_t mask = 0;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && p.less(pts[a], pts[b])) mask |= 1U << pair_bit(a, b, k);
    return mask;
}

double binomial(std::size_t n, std::size_t k)
{
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

unsigned long factorial(std::size_t k)
{
    unsigned long f = 1;
    for (std::size_t i = 2; i <= k; ++i) f *= i;
    return f;
}

Fingerprint empty_fingerprint(std::size_t max_q)
{
    Fingerprint f;
    f.max_q = max_q;
    for (const auto& e : standard_catalog().entries())
        if (e.poset.size() <= max_q) f.ids.push_back(e.id);
    f.values.assign(f.ids.size(), 0.0);
    f.half_widths.assign(f.ids.size(), 0.0);
    return f;
}

}  // namespace

Fingerprint fingerprint(const FinitePoset& p, std::size_t max_q)
{
    if (max_q > 5) throw SizeLimit("fingerprint: max_q " + std::to_string(max_q) + " exceeds 5");
    const std::size_t n = p.size();
    double subsets = 0;
    for (std::size_t k = 1; k <= max_q; ++k) subsets += binomial(n, k);
    if (subsets > 2e7) throw BudgetExceeded("fingerprint: too many subsets for exact counting; use fingerprint_mc");

    const auto& table = labelled_table();
    const auto& cat = standard_catalog();
    Fingerprint f = empty_fingerprint(max_q);
    std::vector<BigInt> count(cat.size(), 0);
    std::vector<std::size_t> pts;
    for (std::size_t k = 1; k <= std::min(max_q, n); ++k) {
        pts.resize(k);
        std::iota(pts.begin(), pts.end(), std::size_t{0});
        for (;;) {
            const auto id = table.id[k][tuple_mask(p, pts.data(), k)];
            if (id < 0) throw InternalInvariantError("fingerprint: subset is not in the catalog");
            count[static_cast<std::size_t>(id)] += 1;
            // Next k-combination in lexicographic order.
            std::size_t i = k;
            while (i > 0 && pts[i - 1] == n - k + (i - 1)) --i;
            if (i == 0) break;
            ++pts[i - 1];
            for (std::size_t j = i; j < k; ++j) pts[j] = pts[j - 1] + 1;
        }
    }
    f.exact.resize(f.ids.size());
    for (std::size_t r = 0; r < f.ids.size(); ++r) {
        const auto& e = cat[f.ids[r]];
        const std::size_t k = e.poset.size();
        if (k > n) {
            f.exact[r] = 0;
        } else {
            // Induced copies among C(n,k) subsets, each admitting |Aut Q| of
            // the k! labellings.
            BigInt subsets_k = 1;
            for (std::size_t i = 0; i < k; ++i) subsets_k *= static_cast<unsigned long>(n - i);
            Rational v(count[e.id] * static_cast<unsigned long>(e.automorphisms), subsets_k);
            v.canonicalize();
            f.exact[r] = v;
        }
        f.values[r] = to_double(f.exact[r]);
    }
    return f;
}

Fingerprint fingerprint_mc(const FinitePoset& p, std::size_t max_q, std::size_t samples, const SeededRng& rng)
{
    if (max_q > 5) throw SizeLimit("fingerprint: max_q " + std::to_string(max_q) + " exceeds 5");
    const std::size_t n = p.size();
    if (max_q > n) throw SizeLimit("fingerprint_mc: max_q exceeds the poset size");
    if (samples < 2) throw InputError("fingerprint_mc needs at least 2 samples");

    const auto& table = labelled_table();
    const auto& cat = standard_catalog();
    std::vector<double> weight(cat.size(), 0.0);
    for (const auto& e : cat.entries())
        if (e.poset.size() <= 5)
            weight[e.id] = static_cast<double>(e.automorphisms) / static_cast<double>(factorial(e.poset.size()));

    std::vector<double> sum(cat.size(), 0.0);
    std::vector<double> sumsq(cat.size(), 0.0);
    std::size_t pts[5];
    for (std::size_t s = 0; s < samples; ++s) {
        const SeededRng r = rng.child(s);
        std::uint64_t draw = 0;
        for (std::size_t k = 0; k < max_q; ++k) {
            for (;;) {
                const std::size_t v = static_cast<std::size_t>(r.below(draw++, n));
                if (std::find(pts, pts + k, v) == pts + k) {
                    pts[k] = v;
                    break;
                }
            }
        }
        for (std::size_t k = 1; k <= max_q; ++k) {
            const auto id = table.id[k][tuple_mask(p, pts, k)];
            if (id < 0) throw InternalInvariantError("fingerprint_mc: tuple is not in the catalog");
            const double w = weight[static_cast<std::size_t>(id)];
            sum[static_cast<std::size_t>(id)] += w;
            sumsq[static_cast<std::size_t>(id)] += w * w;
        }
    }
    Fingerprint f = empty_fingerprint(max_q);
    const double sn = static_cast<double>(samples);
    for (std::size_t r = 0; r < f.ids.size(); ++r) {
        const std::size_t id = f.ids[r];
        const double mean = sum[id] / sn;
        const double var = std::max(0.0, (sumsq[id] - sn * mean * mean) / (sn - 1));
        f.values[r] = mean;
        f.half_widths[r] = 1.959963984540054 * std::sqrt(var / sn);
    }
    return f;
}

FinitePoset random_graph_order(std::size_t n, double p, const SeededRng& rng)
{
    if (n == 0) throw InputError("random_graph_order needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("random_graph_order needs 0 <= p <= 1");
    const SeededRng edges = rng.child(tag_pairs);
    BitMatrix rel(n);
    // Rows above i are already closed, so adding edge i -> j merges row j.
    for (std::size_t i = n; i-- > 0;) {
        auto ri = rel.row(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!(edges.uniform(i * n + j) < p)) continue;
            if (test_bit(ri, j)) continue;
            set_bit(ri, j);
            auto rj = rel.row(j);
            for (std::size_t w = 0; w < rel.words(); ++w) ri[w] |= rj[w];
        }
    }
    return make_trusted_poset(std::move(rel));
}

double c_parameter(std::size_t n, double p)
{
    if (!(p > 0.0 && p <= 1.0)) throw InputError("c_parameter needs 0 < p <= 1");
    if (n == 0) throw InputError("c_parameter needs n >= 1");
    return std::min(std::log(1.0 / p) / (p * static_cast<double>(n)), 1.0);
}

double p_for_c(std::size_t n, double c)
{
    if (!(c > 0.0 && c < 1.0)) throw InputError("p_for_c needs 0 < c < 1");
    if (n == 0) throw InputError("p_for_c needs n >= 1");
    // c_parameter decreases in p; bisect on log p.
    double lo = std::log(1e-300), hi = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double p = std::exp(mid);
        const double v = -mid / (p * static_cast<double>(n));
        if (v > c)
            lo = mid;
        else
            hi = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

ConvergeReport converge_diagnostic(const std::vector<FinitePoset>& posets, const std::optional<MonotoneRC>& target_g,
                                   double threshold)
{
    ConvergeReport rep;
    rep.threshold = threshold;
    std::optional<StepCDF> target_minus, target_plus;
    if (target_g) {
        target_minus = f_minus(*target_g);
        target_plus = f_plus(*target_g);
    }
    std::optional<StepCDF> prev;
    for (std::size_t i = 0; i < posets.size(); ++i) {
        const auto& p = posets[i];
        ConvergeRow row;
        row.n = p.size();
        row.semiorder = semiorder_rank_check(p);
        if (!row.semiorder)
            rep.warnings.push_back("input " + std::to_string(i + 1) +
                                   " is not a semiorder; the limit theorem for degree distributions assumes one");
        const StepCDF minus = nu_empirical(p, Sign::minus);
        if (prev) row.ks_previous = to_double(ks_distance(minus, *prev));
        if (target_g) {
            row.ks_minus_target = to_double(ks_distance(minus, *target_minus));
            row.ks_plus_target = to_double(ks_distance(nu_empirical(p, Sign::plus), *target_plus));
        }
        prev = minus;
        rep.rows.push_back(row);
    }
    std::vector<double> series;
    for (const auto& r : rep.rows) {
        if (target_g)
            series.push_back(*r.ks_minus_target);
        else if (r.ks_previous)
            series.push_back(*r.ks_previous);
    }
    if (!series.empty())
        rep.converging = series.back() <= threshold && (series.size() == 1 || series.back() <= series.front());
    return rep;
}

EquivalenceReport equivalence_test_statistical(const KernelModel& a, const KernelModel& b, std::size_t n,
                                               std::size_t trials, const SeededRng& rng,
                                               const EquivalenceOptions& opt)
{
    if (trials < 30) throw InputError("equivalence_test_statistical needs at least 30 trials");
    if (opt.max_q > 5 || opt.max_q > n) throw SizeLimit("equivalence test: max_q too large");
    double subsets = 0;
    for (std::size_t k = 1; k <= opt.max_q; ++k) subsets += binomial(n, k);
    const bool exact = subsets <= 2e5;

    labelled_table();
    std::vector<Fingerprint> fa(trials), fb(trials);
    parallel_for(
        2 * trials,
        [&](std::size_t job) {
            const std::size_t t = job / 2;
            const bool side_b = job % 2 == 1;
            const SeededRng side = rng.child(side_b ? 1 : 0).trial(t);
            const FinitePoset p = sample_kernel_poset(side_b ? b : a, n, side.child(0));
            Fingerprint f = exact ? fingerprint(p, opt.max_q) : fingerprint_mc(p, opt.max_q, opt.tuples, side.child(1));
            (side_b ? fb : fa)[t] = std::move(f);
        },
        opt.threads);

    EquivalenceReport rep;
    const double tn = static_cast<double>(trials);
    auto stats = [&](const std::vector<Fingerprint>& fs, std::size_t r) {
        double s = 0, ss = 0;
        for (const auto& f : fs) s += f.values[r];
        const double mean = s / tn;
        for (const auto& f : fs) ss += (f.values[r] - mean) * (f.values[r] - mean);
        return std::pair<double, double>{mean, std::sqrt(ss / (tn - 1) / tn)};
    };
    for (std::size_t r = 0; r < fa.front().ids.size(); ++r) {
        EquivalenceRow row;
        row.id = fa.front().ids[r];
        std::tie(row.mean_a, row.se_a) = stats(fa, r);
        std::tie(row.mean_b, row.se_b) = stats(fb, r);
        row.flagged = row.mean_a + 4 * row.se_a < row.mean_b - 4 * row.se_b ||
                      row.mean_b + 4 * row.se_b < row.mean_a - 4 * row.se_a;
        if (row.flagged) ++rep.flags;
        rep.rows.push_back(row);
    }
    return rep;
}

}  // namespace ordlim
