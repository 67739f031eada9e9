#pragma once

#include <vector>

#include "ordlim/cdf.hpp"
#include "ordlim/rational.hpp"

namespace ordlim {

/// Right-continuous piecewise-linear g on [0,1]. Construction only fixes the
/// representation (g(0-) is taken to be g(0)); membership in the class
/// "nondecreasing with x <= g(x) <= 1" is checked by validate_g.
class MonotoneRC {
public:
    MonotoneRC() = default;
    explicit MonotoneRC(PiecewiseLinear f);

    static MonotoneRC identity();
    /// g ≡ 1.
    static MonotoneRC constant_one();
    /// g_c(x) = min(x + c, 1), 0 <= c <= 1.
    static MonotoneRC shift(const Rational& c);

    Rational operator()(const Rational& x) const { return f_(x); }
    Rational left_limit(const Rational& x) const { return f_.left_limit(x); }
    double eval(double x) const { return f_.eval(x); }

    const PiecewiseLinear& function() const { return f_; }
    const std::vector<Knot>& knots() const { return f_.knots(); }

    friend bool operator==(const MonotoneRC&, const MonotoneRC&) = default;

private:
    PiecewiseLinear f_;
};

struct RatePiece {
    Rational lo;
    Rational hi;
    Rational value;

    friend bool operator==(const RatePiece&, const RatePiece&) = default;
};

/// Piecewise-constant r >= 0 on [0,1].
class RateFunction {
public:
    RateFunction() = default;
    /// Pieces must partition [0,1] in order; throws InputError otherwise.
    explicit RateFunction(std::vector<RatePiece> pieces);

    static RateFunction constant(const Rational& r);

    const std::vector<RatePiece>& pieces() const { return pieces_; }

    /// R(x) = integral of r over [0, x].
    Rational cumulative(const Rational& x) const;
    double cumulative(double x) const;

    friend bool operator==(const RateFunction&, const RateFunction&) = default;

private:
    std::vector<RatePiece> pieces_;
    std::vector<Rational> prefix_;
};

bool validate_g(const MonotoneRC& g);

/// F_- = g read as a distribution function (jump g(0) at 0).
StepCDF f_minus(const MonotoneRC& g);

/// F_+(t) = 1 - min{x : 1 - g(x) <= t}, computed by reflecting the completed
/// graph of g in the line x + y = 1.
StepCDF f_plus(const MonotoneRC& g);

/// Throws NotInPMinus unless nu[0,t] >= t for all t.
MonotoneRC g_from_nu_minus(const StepCDF& nu);

/// Inverse of f_plus. Throws NotInPMinus when the reflected function is not
/// in the class.
MonotoneRC g_from_f_plus(const StepCDF& fp);

/// g(x) = sup{y <= 1 : integral of r over [x, y] <= 1}.
MonotoneRC g_from_rate(const RateFunction& r);

/// W_g(x, y) = 1{g(x) < y}.
bool kernel_wg(const MonotoneRC& g, const Rational& x, const Rational& y);

}  // namespace ordlim
