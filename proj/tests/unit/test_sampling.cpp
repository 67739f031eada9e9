#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "ordlim/catalog.hpp"
#include "ordlim/densities.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/recognition.hpp"
#include "ordlim/sampling.hpp"

using namespace ordlim;

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

std::size_t catalog_id(const FinitePoset& p) { return *standard_catalog().find(p); }

}  // namespace

TEST_CASE("kernel samples")
{
    const SeededRng rng(5);
    CHECK(sample_kernel_poset(KernelModel::wg(MonotoneRC::constant_one()), 50, rng) == FinitePoset::antichain(50));

    // g(x) = x: the order of the drawn positions.
    const auto id = KernelModel::wg(MonotoneRC::identity());
    const auto p = sample_kernel_poset(id, 3, rng);
    const SeededRng pts = rng.child(tag_points);
    std::vector<double> x;
    for (std::size_t i = 0; i < 3; ++i) x.push_back(id.draw(pts, i).x);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(p.less(i, j) == (x[i] < x[j]));
    CHECK(p.relation_count() == 3);

    const auto s = sample_kernel_poset(KernelModel::wc(q(3, 10)), 1000, rng);
    CHECK(semiorder_rank_check(s));

    const auto full = KernelModel::measure(AtomicMeasure::from_atoms({{q(0), q(1), q(1)}}));
    CHECK(sample_kernel_poset(full, 30, rng) == FinitePoset::antichain(30));
    CHECK(sample_kernel_poset(full, 1, rng).size() == 1);
}

TEST_CASE("two-atom measure chain frequency")
{
    const auto mu = KernelModel::measure(AtomicMeasure::from_atoms({{q(0), q(1, 10), q(1, 2)}, {q(1, 2), q(3, 5), q(1, 2)}}));
    int chains = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) chains += sample_kernel_poset(mu, 2, SeededRng(1).trial(t)).relation_count() == 1;
    CHECK(std::abs(chains / double(trials) - 0.5) < 0.04);
}

TEST_CASE("custom kernels")
{
    const auto w = KernelModel::custom([](double a, double b) { return a < b ? 1.0 : 0.0; }, true, "lt");
    const auto p = sample_kernel_poset(w, 40, SeededRng(2));
    CHECK(p.relation_count() == 40 * 39 / 2);
    const auto bad = KernelModel::custom([](double, double) { return 0.5; }, false, "half");
    CHECK_THROWS_AS(sample_kernel_poset(bad, 60, SeededRng(2)), NotTransitive);
}

TEST_CASE("interval samples from step measures are interval orders")
{
    const auto mu = StepKernelMeasure::from_cells({{q(0), q(1, 3), {{q(1, 3), q(1, 2)}, {q(2, 3), q(1, 2)}}},
                                                   {q(1, 3), q(1), {{q(1), q(1)}}}});
    for (int t = 0; t < 10; ++t) CHECK(is_interval_order(sample_interval_poset(mu, 60, SeededRng(3).trial(t))));
}

TEST_CASE("empirical degree distributions")
{
    CHECK(nu_empirical(FinitePoset::antichain(4), Sign::minus) == StepCDF::point_mass(q(0)));
    CHECK(nu_empirical(FinitePoset::antichain(4), Sign::plus) == StepCDF::point_mass(q(0)));
    const auto c2 = nu_empirical(FinitePoset::chain(2), Sign::minus);
    CHECK(c2(q(0)) == q(1, 2));
    CHECK(c2.left_limit(q(1, 2)) == q(1, 2));
    CHECK(c2(q(1, 2)) == 1);
    const auto p = sample_kernel_poset(KernelModel::wc(q(1, 5)), 300, SeededRng(4));
    CHECK(nu_empirical(reflect(p), Sign::minus) == nu_empirical(p, Sign::plus));
}

TEST_CASE("fingerprints")
{
    const auto a2 = catalog_id(FinitePoset::antichain(2)), c2 = catalog_id(FinitePoset::chain(2));
    auto value = [](const Fingerprint& f, std::size_t id) {
        const auto it = std::find(f.ids.begin(), f.ids.end(), id);
        return f.exact[static_cast<std::size_t>(it - f.ids.begin())];
    };
    const auto fa = fingerprint(FinitePoset::antichain(10), 2);
    CHECK(value(fa, c2) == 0);
    CHECK(value(fa, a2) == 1);
    // Labelled: 45 ordered pairs of the 90 are increasing.
    CHECK(value(fingerprint(FinitePoset::chain(10), 2), c2) == q(1, 2));
    const auto fh = fingerprint(FinitePoset::two_plus_two(), 4);
    CHECK(value(fh, catalog_id(FinitePoset::two_plus_two())) == q(1, 12));

    // Exact entries match induced densities.
    const auto p = sample_kernel_poset(KernelModel::wc(q(1, 4)), 12, SeededRng(6));
    const auto fp = fingerprint(p, 4);
    for (std::size_t r = 0; r < fp.ids.size(); ++r)
        CHECK(fp.exact[r] == density(standard_catalog()[fp.ids[r]].poset, p, DensityKind::ind));
    CHECK_THROWS_AS(fingerprint(p, 6), SizeLimit);
}

TEST_CASE("Monte Carlo fingerprint tracks the exact one")
{
    const auto p = sample_kernel_poset(KernelModel::wc(q(1, 4)), 40, SeededRng(7));
    const auto exact = fingerprint(p, 3);
    const auto mc = fingerprint_mc(p, 3, 40000, SeededRng(8));
    REQUIRE(mc.ids == exact.ids);
    for (std::size_t r = 0; r < mc.ids.size(); ++r)
        CHECK(std::abs(mc.values[r] - exact.values[r]) <= 4 * mc.half_widths[r] + 1e-12);
}

TEST_CASE("random graph orders")
{
    CHECK(random_graph_order(30, 1.0, SeededRng(1)) == FinitePoset::chain(30));
    CHECK(random_graph_order(30, 0.0, SeededRng(1)) == FinitePoset::antichain(30));
    CHECK(c_parameter(100, 1.0) == 0.0);
    CHECK(c_parameter(1000, 0.1) == doctest::Approx(std::log(10.0) / 100.0));
    CHECK(c_parameter(1000, 1e-6) == 1.0);
    const double p = p_for_c(3000, 0.3);
    CHECK(c_parameter(3000, p) == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("convergence diagnostic")
{
    const auto p = sample_kernel_poset(KernelModel::wc(q(3, 10)), 200, SeededRng(9));
    const auto flat = converge_diagnostic({p, p, p}, std::nullopt);
    CHECK(flat.rows[1].ks_previous == 0.0);
    CHECK(flat.rows[2].ks_previous == 0.0);
    CHECK(flat.converging);

    std::vector<FinitePoset> grow;
    for (std::size_t n : {250, 500, 1000, 2000})
        grow.push_back(sample_kernel_poset(KernelModel::wc(q(3, 10)), n, SeededRng(10).trial(n)));
    const auto rep = converge_diagnostic(grow, MonotoneRC::shift(q(3, 10)));
    CHECK(*rep.rows.back().ks_minus_target < *rep.rows.front().ks_minus_target);
    CHECK(rep.converging);

    std::vector<FinitePoset> alt;
    for (int i = 0; i < 6; ++i)
        alt.push_back(sample_kernel_poset(KernelModel::wc(i % 2 ? q(1, 2) : q(1, 5)), 400, SeededRng(11).trial(i)));
    CHECK_FALSE(converge_diagnostic(alt, std::nullopt).converging);

    const auto h = converge_diagnostic({FinitePoset::two_plus_two()}, std::nullopt);
    CHECK_FALSE(h.warnings.empty());
}

TEST_CASE("statistical equivalence test")
{
    EquivalenceOptions opt;
    opt.max_q = 3;
    const auto a = KernelModel::wc(q(1, 5)), b = KernelModel::wc(q(1, 2));
    CHECK(equivalence_test_statistical(a, a, 60, 30, SeededRng(1), opt).flags == 0);
    const auto rep = equivalence_test_statistical(a, b, 60, 30, SeededRng(1), opt);
    const auto c2 = catalog_id(FinitePoset::chain(2));
    bool chain_flagged = false;
    for (const auto& row : rep.rows) chain_flagged |= row.id == c2 && row.flagged;
    CHECK(chain_flagged);
    CHECK_THROWS_AS(equivalence_test_statistical(a, b, 60, 10, SeededRng(1), opt), InputError);
}
