#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ordlim/rational.hpp"

namespace ordlim {

/// A knot of a piecewise-linear function: the left limit and the value at x.
struct Knot {
    Rational x;
    Rational left;
    Rational right;

    friend bool operator==(const Knot&, const Knot&) = default;
};

using Vertex = std::pair<Rational, Rational>;

/// Right-continuous piecewise-linear function on [0,1] with jumps.
///
/// Knots sit at 0 = x_0 < ... < x_k = 1; on (x_i, x_{i+1}) the function is
/// the segment from (x_i, right_i) to (x_{i+1}, left_{i+1}). The knot list is
/// kept normalized (no removable interior knots), so equality of knot lists is
/// equality of functions including the left limits.
class PiecewiseLinear {
public:
    PiecewiseLinear() = default;
    explicit PiecewiseLinear(std::vector<Knot> knots);

    const std::vector<Knot>& knots() const { return knots_; }

    Rational operator()(const Rational& x) const;
    Rational left_limit(const Rational& x) const;
    double eval(double x) const;

    /// Slope of the segment starting at knot i.
    Rational slope_after(std::size_t i) const;

    bool nondecreasing() const;

    /// Vertices of the completed graph (jumps filled by vertical segments),
    /// in order along the curve.
    std::vector<Vertex> completed_graph() const;

    /// Inverse of completed_graph for a chain with nondecreasing x running
    /// from x = 0 to x = 1; vertical runs become jumps read right-continuously.
    static PiecewiseLinear from_completed_graph(std::span<const Vertex> chain);

    /// Pointwise sum of weighted functions.
    static PiecewiseLinear combine(std::span<const std::pair<Rational, PiecewiseLinear>> terms);

    friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

private:
    std::size_t segment_of(const Rational& x) const;
    std::vector<Knot> knots_;
};

/// Distribution function of a probability measure on [0,1]: nondecreasing,
/// right-continuous, F(0-) = 0 and F(1) = 1.
class StepCDF {
public:
    StepCDF() = default;

    /// Validates; throws InputError when `f` is not a distribution function.
    static StepCDF from_function(PiecewiseLinear f);

    static StepCDF point_mass(const Rational& t);
    static StepCDF uniform();
    /// Uniform on [a, b] with a < b.
    static StepCDF uniform_on(const Rational& a, const Rational& b);
    /// Finitely many atoms (location, weight); weights must sum to 1.
    static StepCDF from_atoms(std::span<const std::pair<Rational, Rational>> atoms);
    /// Convex combination; weights must sum to 1.
    static StepCDF mixture(std::span<const std::pair<Rational, StepCDF>> parts);

    Rational operator()(const Rational& t) const { return f_(t); }
    Rational left_limit(const Rational& t) const { return f_.left_limit(t); }
    double eval(double t) const { return f_.eval(t); }

    const PiecewiseLinear& function() const { return f_; }
    const std::vector<Knot>& knots() const { return f_.knots(); }

    friend bool operator==(const StepCDF&, const StepCDF&) = default;

private:
    explicit StepCDF(PiecewiseLinear f) : f_(std::move(f)) {}
    PiecewiseLinear f_;
};

/// Kolmogorov distance sup_t |F(t) - G(t)|, exact over the merged knots.
Rational ks_distance(const StepCDF& f, const StepCDF& g);

/// Moment E[X^k] of the distribution, exact.
Rational moment(const StepCDF& f, unsigned k);

}  // namespace ordlim
