#include "doctest.h"
#include "ordlim/errors.hpp"
#include "ordlim/measures.hpp"

using namespace ordlim;

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

StepKernelMeasure two_cells()
{
    return StepKernelMeasure::from_cells({{q(0), q(1, 2), {{q(1, 2), q(1)}}}, {q(1, 2), q(1), {{q(1), q(1)}}}});
}

// The averaging example: two cells under the gap (0, 1/2), then one cell
// above it.
StepKernelMeasure averaging_example()
{
    return StepKernelMeasure::from_cells({{q(0), q(1, 4), {{q(1, 2), q(1)}}},
                                          {q(1, 4), q(1, 2), {{q(3, 4), q(1)}}},
                                          {q(1, 2), q(1), {{q(1), q(1)}}}});
}

}  // namespace

TEST_CASE("validation")
{
    CHECK_THROWS_AS(AtomicMeasure::from_atoms({{q(1, 2), q(1, 4), q(1)}}), InputError);
    CHECK_THROWS_AS(AtomicMeasure::from_atoms({{q(0), q(1), q(1, 2)}}), InputError);
    CHECK_THROWS_AS(StepKernelMeasure::from_cells({{q(0), q(1, 2), {{q(1), q(1)}}}}), InputError);
    CHECK_THROWS_AS(StepKernelMeasure::from_cells({{q(0), q(1), {{q(1, 2), q(1)}}}}), InputError);
    const auto merged = StepKernelMeasure::from_cells({{q(0), q(1, 2), {{q(1), q(1)}}}, {q(1, 2), q(1), {{q(1), q(1)}}}});
    CHECK(merged == StepKernelMeasure::constant(q(1)));
}

TEST_CASE("right marginals")
{
    const auto m1 = right_marginal(StepKernelMeasure::constant(q(1)));
    CHECK(m1 == StepCDF::point_mass(q(1)));
    const auto m2 = right_marginal(two_cells());
    CHECK(m2(q(1, 2)) == q(1, 2));
    CHECK(m2.left_limit(q(1, 2)) == 0);
    CHECK(m2.left_limit(q(1)) == q(1, 2));
    const auto a = AtomicMeasure::from_atoms({{q(0), q(1, 4), q(1, 3)}, {q(1, 2), q(3, 4), q(2, 3)}});
    const auto m3 = right_marginal(a);
    CHECK(m3(q(1, 4)) == q(1, 3));
    CHECK(m3.left_limit(q(1, 4)) == 0);
    CHECK(m3(q(3, 4)) == 1);
    CHECK(m3.left_limit(q(3, 4)) == q(1, 3));
}

TEST_CASE("support and gaps")
{
    const auto s1 = support_and_gaps(StepCDF::point_mass(q(1, 2)));
    CHECK(s1.support == std::vector<Interval>{{q(1, 2), q(1, 2)}});
    CHECK(s1.gaps == std::vector<Interval>{{q(0), q(1, 2)}, {q(1, 2), q(1)}});
    const auto s2 = support_and_gaps(StepCDF::uniform());
    CHECK(s2.support == std::vector<Interval>{{q(0), q(1)}});
    CHECK(s2.gaps.empty());
    const std::vector<std::pair<Rational, StepCDF>> parts{{q(1, 2), StepCDF::point_mass(q(1, 2))},
                                                         {q(1, 2), StepCDF::uniform_on(q(3, 4), q(1))}};
    const auto s3 = support_and_gaps(StepCDF::mixture(parts));
    CHECK(s3.support == std::vector<Interval>{{q(1, 2), q(1, 2)}, {q(3, 4), q(1)}});
    CHECK(s3.gaps == std::vector<Interval>{{q(0), q(1, 2)}, {q(1, 2), q(3, 4)}});
}

TEST_CASE("h maps")
{
    const auto d = StepCDF::point_mass(q(1, 2));
    CHECK(h_map(d, q(3, 10), HVariant::minus) == 0);
    CHECK(h_map(d, q(3, 10), HVariant::plus) == q(1, 2));
    CHECK(h_map(d, q(1, 2), HVariant::plus) == 1);
    CHECK(h_map(d, q(1, 2), HVariant::bar_plus) == q(1, 2));
    CHECK(h_map(d, q(1, 2), HVariant::minus) == 0);
    CHECK(h_map(d, q(3, 4), HVariant::minus) == q(1, 2));
    for (int i = 0; i <= 10; ++i)
        for (auto v : {HVariant::minus, HVariant::plus, HVariant::bar_plus})
            CHECK(h_map(StepCDF::uniform(), q(i, 10), v) == q(i, 10));
}

TEST_CASE("push_h on the two-cell example")
{
    const auto mu = two_cells();
    const auto minus = push_h(mu, HVariant::minus);
    CHECK(minus.pieces().empty());
    CHECK(minus.atoms() == std::vector<Atom>{{q(0), q(1, 2), q(1, 2)}, {q(1, 2), q(1), q(1, 2)}});
    const auto bar = push_h(mu, HVariant::bar_plus);
    CHECK(bar.pieces().empty());
    CHECK(bar.atoms() == std::vector<Atom>{{q(1, 2), q(1, 2), q(1, 2)}, {q(1), q(1), q(1, 2)}});
    CHECK_THROWS_AS(push_h(mu, HVariant::plus), InputError);

    // Right marginal δ_1: the whole gap (0, 1) collapses to 0.
    const auto full = to_mixed(StepKernelMeasure::constant(q(1)));
    const auto a = AtomicMeasure::from_atoms({{q(0), q(1, 4), q(1, 4)}, {q(1, 4), q(1, 2), q(1, 4)},
                                              {q(1, 2), q(3, 4), q(1, 4)}, {q(3, 4), q(1), q(1, 4)}});
    CHECK(push_h(full, HVariant::minus).atoms().size() == 1);
    // Right ends 1/4, 1/2, 3/4, 1: each x in (a, b] drops to a.
    CHECK(push_h(a, HVariant::minus) ==
          AtomicMeasure::from_atoms({{q(0), q(1, 4), q(1, 4)}, {q(0), q(1, 2), q(1, 4)},
                                     {q(1, 4), q(3, 4), q(1, 4)}, {q(1, 2), q(1), q(1, 4)}}));
}

TEST_CASE("project_star")
{
    const auto mu = averaging_example();
    const auto star = project_star(mu);
    REQUIRE(star.cells().size() == 2);
    CHECK(star.cells()[0].lo == 0);
    CHECK(star.cells()[0].hi == q(1, 2));
    CHECK(star.cells()[0].cond == Conditional{{q(1, 2), q(1, 2)}, {q(3, 4), q(1, 2)}});
    CHECK(project_star(star) == star);
    CHECK(right_marginal(star) == right_marginal(mu));
    CHECK(project_star(two_cells()) == two_cells());
}

TEST_CASE("equivalence")
{
    const auto mu = averaging_example();
    CHECK(equivalent(mu, mu));
    CHECK(equivalent(mu, project_star(mu)));
    CHECK(equivalent_via_h_minus(mu, project_star(mu)));
    CHECK_FALSE(equivalent(two_cells(), StepKernelMeasure::constant(q(1))));
    CHECK_FALSE(equivalent_via_h_minus(two_cells(), StepKernelMeasure::constant(q(1))));
}

TEST_CASE("left_uniformize preserves the generated order law")
{
    // Two atoms: the pushed cells keep the same pairwise precedence.
    const auto a = AtomicMeasure::from_atoms({{q(0), q(1, 10), q(1, 2)}, {q(1, 2), q(3, 5), q(1, 2)}});
    const auto u = left_uniformize(a);
    REQUIRE(u.cells().size() == 2);
    CHECK(u.cells()[0].hi == q(1, 2));
    CHECK(u.cells()[0].cond == Conditional{{q(1, 2), q(1)}});
    CHECK(u.cells()[1].cond == Conditional{{q(1), q(1)}});
    // Already left-uniform input is unchanged.
    CHECK(left_uniformize(to_mixed(two_cells())) == two_cells());
}
