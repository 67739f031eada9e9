#include <random>

#include "doctest.h"
#include "ordlim/errors.hpp"
#include "ordlim/semiorders.hpp"

using namespace ordlim;

namespace {

Rational q(long a, long b = 1)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Random member of G on a dyadic grid: nondecreasing, right-continuous,
// x <= g(x) <= 1, with occasional jumps and flats.
MonotoneRC random_g(std::mt19937_64& gen)
{
    std::uniform_int_distribution<int> pieces(1, 6), coin(0, 3);
    const int m = pieces(gen);
    std::vector<Rational> xs{q(0)};
    for (int i = 1; i < m; ++i) xs.push_back(q(i, m));
    xs.push_back(q(1));
    std::vector<Knot> knots;
    Rational prev = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const Rational x = xs[i];
        Rational left = prev > x ? prev : x;
        if (i > 0 && coin(gen) == 0) left += (1 - left) * q(coin(gen), 8);
        Rational right = left;
        if (coin(gen) == 0) right += (1 - right) * q(1 + coin(gen), 6);
        if (i + 1 == xs.size()) left = right = 1;
        if (i == 0) left = right;
        knots.push_back({x, left, right});
        prev = right;
    }
    return MonotoneRC(PiecewiseLinear(knots));
}

// F_+(t) = 1 - min{x : g(x) >= 1 - t}, evaluated directly.
Rational f_plus_direct(const MonotoneRC& g, const Rational& t)
{
    const Rational s = 1 - t;
    const auto& k = g.knots();
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        if (k[i].right >= s) return 1 - k[i].x;
        if (k[i + 1].left >= s)
            return 1 - (k[i].x + (s - k[i].right) * (k[i + 1].x - k[i].x) / (k[i + 1].left - k[i].right));
    }
    return 0;
}

template <typename F, typename G>
void check_same(const F& f, const G& g, int grid = 96)
{
    for (int i = 0; i <= grid; ++i) {
        const Rational x = q(i, grid);
        CHECK(f(x) == g(x));
        if (i > 0) CHECK(f.left_limit(x) == g.left_limit(x));
    }
}

}  // namespace

TEST_CASE("validate_g")
{
    CHECK(validate_g(MonotoneRC::identity()));
    CHECK(validate_g(MonotoneRC::shift(q(3, 10))));
    CHECK(validate_g(MonotoneRC::constant_one()));
    CHECK_FALSE(validate_g(MonotoneRC(PiecewiseLinear({{q(0), q(0), q(0)}, {q(1), q(1, 2), q(1, 2)}}))));
}

TEST_CASE("f_minus examples")
{
    const Rational c = q(3, 10);
    const auto shifted = StepCDF::from_function(PiecewiseLinear({{q(0), q(0), c}, {1 - c, q(1), q(1)}, {q(1), q(1), q(1)}}));
    check_same(f_minus(MonotoneRC::shift(c)), shifted);
    check_same(f_minus(MonotoneRC::identity()), StepCDF::uniform());
    check_same(f_minus(MonotoneRC::constant_one()), StepCDF::point_mass(q(0)));
    CHECK_THROWS_AS(f_minus(MonotoneRC(PiecewiseLinear({{q(0), q(0), q(0)}, {q(1), q(1, 2), q(1, 2)}}))), InputError);
}

TEST_CASE("f_plus examples")
{
    const auto gc = MonotoneRC::shift(q(3, 10));
    const auto fp = f_plus(gc);
    for (int i = 0; i <= 40; ++i) CHECK(fp(q(i, 40)) == gc(q(i, 40)));
    check_same(f_plus(MonotoneRC::identity()), StepCDF::uniform());
    check_same(f_plus(MonotoneRC::constant_one()), StepCDF::point_mass(q(0)));
}

TEST_CASE("f_plus matches the defining formula")
{
    std::mt19937_64 gen(2);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_g(gen);
        REQUIRE(validate_g(g));
        const auto fp = f_plus(g);
        for (int i = 0; i <= 120; ++i) CHECK(fp(q(i, 120)) == f_plus_direct(g, q(i, 120)));
    }
}

TEST_CASE("inverse maps")
{
    check_same(g_from_nu_minus(StepCDF::uniform()), MonotoneRC::identity());
    const Rational c = q(1, 5);
    check_same(g_from_nu_minus(f_minus(MonotoneRC::shift(c))), MonotoneRC::shift(c));
    CHECK_THROWS_AS(g_from_nu_minus(StepCDF::uniform_on(q(1, 2), q(1))), NotInPMinus);
    check_same(g_from_f_plus(StepCDF::uniform()), MonotoneRC::identity());
    check_same(g_from_f_plus(f_plus(MonotoneRC::shift(c))), MonotoneRC::shift(c));

    std::mt19937_64 gen(12);
    for (int t = 0; t < 50; ++t) {
        const auto g = random_g(gen);
        check_same(g_from_nu_minus(f_minus(g)), g);
        check_same(g_from_f_plus(f_plus(g)), g);
    }
}

TEST_CASE("g from a rate")
{
    check_same(g_from_rate(RateFunction::constant(q(0))), MonotoneRC::constant_one());
    CHECK(g_from_rate(RateFunction::constant(q(2))) == MonotoneRC::shift(q(1, 2)));
    const auto g = g_from_rate(RateFunction({{q(0), q(1, 2), q(4)}, {q(1, 2), q(1), q(0)}}));
    CHECK(g(q(0)) == q(1, 4));
    CHECK(g(q(1, 8)) == q(3, 8));
    CHECK(g.left_limit(q(1, 4)) == q(1, 2));
    // At x = 1/4 the integral over [1/4, y] is 1 for y = 1/2 and stays 1 up
    // to y = 1, so the supremum is 1.
    CHECK(g(q(1, 4)) == 1);
    CHECK(g(q(3, 4)) == 1);
    CHECK(validate_g(g));

    // Direct check of the sup on a grid for a varied rate.
    const RateFunction r({{q(0), q(1, 3), q(3)}, {q(1, 3), q(2, 3), q(1, 2)}, {q(2, 3), q(1), q(6)}});
    const auto h = g_from_rate(r);
    for (int i = 0; i <= 60; ++i) {
        const Rational x = q(i, 60);
        const Rational y = h(x);
        CHECK(r.cumulative(y) - r.cumulative(x) <= 1);
        if (y < 1) {
            CHECK(r.cumulative(y) - r.cumulative(x) == 1);
            CHECK(r.cumulative(y + q(1, 1000)) - r.cumulative(x) > 1);
        }
    }
}

TEST_CASE("kernel W_g")
{
    CHECK(kernel_wg(MonotoneRC::identity(), q(1, 5), q(1, 2)));
    CHECK_FALSE(kernel_wg(MonotoneRC::shift(q(3, 10)), q(1, 5), q(1, 2)));
    CHECK_FALSE(kernel_wg(MonotoneRC::constant_one(), q(0), q(1)));
}
