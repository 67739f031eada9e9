#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ordlim/errors.hpp"
#include "ordlim/io.hpp"
#include "ordlim/sampling.hpp"

using namespace ordlim;

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("rationals")
{
    CHECK(parse_rational("3/10") == q(3, 10));
    CHECK(parse_rational("0.25") == q(1, 4));
    CHECK(parse_rational("-2") == q(-2));
    CHECK(to_string(q(1)) == "1/1");
    CHECK(to_string(q(6, 8)) == "3/4");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("poset format")
{
    const auto p = parse_poset("# comment\nposet 4\n1 2\n\n3 4\n");
    CHECK(p == FinitePoset::two_plus_two());
    std::mt19937_64 gen(1);
    for (int t = 0; t < 20; ++t) {
        const auto r = oracle::random_poset(12, 0.2, gen);
        CHECK(parse_poset(format_poset(r)) == r);
    }
    CHECK_THROWS_AS(parse_poset("poset 2\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("poset 2\n1 2\n2 1\n"), CycleError);
    CHECK_THROWS_AS(parse_poset("graph 2\n"), ParseError);
}

TEST_CASE("measure formats")
{
    const auto mu = StepKernelMeasure::from_cells({{q(0), q(1, 3), {{q(1, 3), q(1, 2)}, {q(2, 3), q(1, 2)}}},
                                                   {q(1, 3), q(1), {{q(1), q(1)}}}});
    CHECK(parse_step_measure(format_step_measure(mu)) == mu);
    CHECK(parse_step_measure("stepmeasure 1\n0 1 : 1 1\n") == StepKernelMeasure::constant(q(1)));

    const auto a = AtomicMeasure::from_atoms({{q(0), q(1, 4), q(1, 3)}, {q(1, 2), q(3, 4), q(2, 3)}});
    CHECK(parse_atomic_measure(format_atomic_measure(a)) == a);

    const auto m = push_h(mu, HVariant::minus);
    CHECK(parse_mixed_measure(format_mixed_measure(m)) == m);

    CHECK(std::get<AtomicMeasure>(parse_any_measure(format_atomic_measure(a))) == a);
    CHECK(std::get<StepKernelMeasure>(parse_any_measure(format_step_measure(mu))) == mu);
    CHECK_THROWS_AS(parse_atomic_measure("atoms 1\n1/2 1/4 1\n"), ParseError);
}

TEST_CASE("function formats")
{
    const auto g = MonotoneRC::shift(q(3, 10));
    CHECK(parse_g(format_g(g)) == g);
    const auto f = f_plus(g);
    CHECK(parse_cdf(format_cdf(f)) == f);
    const PiecewiseLinear pw({{q(0), q(0), q(1, 4)}, {q(1, 2), q(1, 2), q(3, 4)}, {q(1), q(1), q(1)}});
    CHECK(parse_pwl(format_pwl(pw)) == pw);
    CHECK_THROWS_AS(parse_pwl("pwl 2\n0 0 0 5\n1 1 1 0\n"), ParseError);
    const RateFunction r({{q(0), q(1, 2), q(4)}, {q(1, 2), q(1), q(0)}});
    CHECK(parse_rate(format_rate(r)) == r);
    CHECK_THROWS_AS(parse_g("pwl 2\n0 0 0 1/2\n1 1/2 1/2 0\n"), ParseError);
}

TEST_CASE("graph format")
{
    const auto c = SimpleGraph::cycle(5);
    CHECK(parse_graph(format_graph(c)) == c);
    CHECK_THROWS_AS(parse_graph("graph 3\n1 1\n"), ParseError);
}

TEST_CASE("representation csv")
{
    const auto r = interval_representation(FinitePoset::chain(2));
    CHECK(format_representation_csv(r) == "index,rank,a,b\n1,1,1/2,1/2\n2,2,1/1,1/1\n");
}
