#include "doctest.h"
#include "ordlim/cdf.hpp"
#include "ordlim/errors.hpp"

using namespace ordlim;

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("piecewise linear evaluation")
{
    const PiecewiseLinear f({{q(0), q(0), q(1, 4)}, {q(1, 2), q(1, 2), q(3, 4)}, {q(1), q(1), q(1)}});
    CHECK(f(q(0)) == q(1, 4));
    CHECK(f(q(1, 4)) == q(3, 8));
    CHECK(f.left_limit(q(1, 2)) == q(1, 2));
    CHECK(f(q(1, 2)) == q(3, 4));
    CHECK(f(q(3, 4)) == q(7, 8));
    CHECK(f.nondecreasing());
    CHECK(f.eval(0.25) == doctest::Approx(0.375));
}

TEST_CASE("collinear knots are dropped")
{
    const PiecewiseLinear f({{q(0), q(0), q(0)}, {q(1, 2), q(1, 2), q(1, 2)}, {q(1), q(1), q(1)}});
    CHECK(f.knots().size() == 2);
}

TEST_CASE("completed graph round trip")
{
    const PiecewiseLinear f({{q(0), q(0), q(1, 4)}, {q(1, 2), q(1, 2), q(3, 4)}, {q(1), q(1), q(1)}});
    const auto g = f.completed_graph();
    CHECK(PiecewiseLinear::from_completed_graph(g) == f);
}

TEST_CASE("step CDFs")
{
    const auto d = StepCDF::point_mass(q(1, 2));
    CHECK(d(q(1, 4)) == 0);
    CHECK(d(q(1, 2)) == 1);
    CHECK(d.left_limit(q(1, 2)) == 0);
    const auto u = StepCDF::uniform();
    CHECK(u(q(1, 3)) == q(1, 3));
    const std::vector<std::pair<Rational, Rational>> atoms{{q(1, 4), q(1, 3)}, {q(3, 4), q(2, 3)}};
    const auto a = StepCDF::from_atoms(atoms);
    CHECK(a(q(1, 4)) == q(1, 3));
    CHECK(a(q(3, 4)) == 1);
    CHECK(a.left_limit(q(3, 4)) == q(1, 3));
    const std::vector<std::pair<Rational, StepCDF>> parts{{q(1, 2), d}, {q(1, 2), StepCDF::uniform_on(q(3, 4), q(1))}};
    const auto m = StepCDF::mixture(parts);
    CHECK(m(q(1, 2)) == q(1, 2));
    CHECK(m(q(7, 8)) == q(3, 4));
    CHECK_THROWS_AS(StepCDF::from_function(PiecewiseLinear({{q(0), q(0), q(1, 2)}, {q(1), q(1, 4), q(1, 4)}})),
                    InputError);
}

TEST_CASE("Kolmogorov distance")
{
    const auto u = StepCDF::uniform();
    CHECK(ks_distance(u, u) == 0);
    CHECK(ks_distance(StepCDF::point_mass(q(0)), u) == 1);
    // max(U - c, 0): jump c at 0, then slope 1 up to 1 - c.
    const Rational c = q(3, 10);
    const auto shifted = StepCDF::from_function(PiecewiseLinear({{q(0), q(0), c}, {1 - c, q(1), q(1)}, {q(1), q(1), q(1)}}));
    CHECK(ks_distance(u, shifted) == c);
    // Atoms against atoms: the gap just before a jump counts.
    const auto a = StepCDF::point_mass(q(1, 2)), b = StepCDF::point_mass(q(3, 4));
    CHECK(ks_distance(a, b) == 1);
}

TEST_CASE("moments")
{
    CHECK(moment(StepCDF::uniform(), 1) == q(1, 2));
    CHECK(moment(StepCDF::uniform(), 2) == q(1, 3));
    CHECK(moment(StepCDF::point_mass(q(1, 2)), 3) == q(1, 8));
    const std::vector<std::pair<Rational, StepCDF>> parts{{q(1, 2), StepCDF::point_mass(q(1))},
                                                         {q(1, 2), StepCDF::uniform()}};
    CHECK(moment(StepCDF::mixture(parts), 2) == q(1, 2) + q(1, 6));
}
