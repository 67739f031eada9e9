#pragma once

#include <utility>
#include <vector>

#include "ordlim/cdf.hpp"
#include "ordlim/rational.hpp"

namespace ordlim {

/// Point (x, y) of the triangle 0 <= x <= y <= 1 (the closed interval [x, y])
/// carrying mass w.
struct Atom {
    Rational x;
    Rational y;
    Rational w;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finite distribution of right endpoints: (y, p) pairs, sorted by y.
using Conditional = std::vector<std::pair<Rational, Rational>>;

/// Finitely supported probability measure on the triangle.
class AtomicMeasure {
public:
    AtomicMeasure() = default;

    /// Validates (inside the triangle, positive weights summing to 1) and
    /// merges repeated points.
    static AtomicMeasure from_atoms(std::vector<Atom> atoms);

    const std::vector<Atom>& atoms() const { return atoms_; }

    friend bool operator==(const AtomicMeasure&, const AtomicMeasure&) = default;

private:
    std::vector<Atom> atoms_;
};

/// Uniform x on [lo, hi] with density 1 and right endpoint drawn from `cond`
/// independently of x. Every atom of `cond` lies at or above hi.
struct Cell {
    Rational lo;
    Rational hi;
    Conditional cond;

    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Measure with Lebesgue left marginal whose conditional law of y is constant
/// on each cell of a partition of [0,1].
///
/// Stored canonically: conditionals sorted with merged atoms, and adjacent
/// cells with identical conditionals merged. Equality is therefore equality
/// of measures.
class StepKernelMeasure {
public:
    StepKernelMeasure() = default;

    /// Cells must partition [0,1] in order. Throws InputError otherwise.
    static StepKernelMeasure from_cells(std::vector<Cell> cells);

    /// Single cell [0,1] with conditional δ_y.
    static StepKernelMeasure constant(const Rational& y);

    const std::vector<Cell>& cells() const { return cells_; }

    friend bool operator==(const StepKernelMeasure&, const StepKernelMeasure&) = default;

private:
    std::vector<Cell> cells_;
};

/// Disjoint density-1 uniform pieces plus atoms; total mass 1. This is the
/// image class of the h-pushforwards of step measures.
class MixedMeasure {
public:
    MixedMeasure() = default;

    /// Pieces need not cover [0,1] but must be disjoint. Throws InputError on
    /// a malformed piece or atom, or when the total mass is not 1.
    static MixedMeasure from_parts(std::vector<Cell> pieces, std::vector<Atom> atoms);

    const std::vector<Cell>& pieces() const { return pieces_; }
    const std::vector<Atom>& atoms() const { return atoms_; }

    friend bool operator==(const MixedMeasure&, const MixedMeasure&) = default;

private:
    std::vector<Cell> pieces_;
    std::vector<Atom> atoms_;
};

MixedMeasure to_mixed(const StepKernelMeasure& mu);
MixedMeasure to_mixed(const AtomicMeasure& mu);

StepCDF right_marginal(const AtomicMeasure& mu);
StepCDF right_marginal(const StepKernelMeasure& mu);
StepCDF right_marginal(const MixedMeasure& mu);

StepCDF left_marginal(const AtomicMeasure& mu);
StepCDF left_marginal(const MixedMeasure& mu);

struct Interval {
    Rational lo;
    Rational hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Support as maximal closed components (points are lo == hi) and the open
/// gaps of [0,1] left over, end gaps included. An end gap touching 0 is
/// reported as (0, b) even when it contains 0 itself; likewise at 1.
struct SupportInfo {
    std::vector<Interval> support;
    std::vector<Interval> gaps;
};

SupportInfo support_and_gaps(const StepCDF& nu);

enum class HVariant { minus, plus, bar_plus };

/// h_ν^- (x) = sup{z < x in supp ν} with sup ∅ = 0, h_ν^+ (x) = inf{z > x in
/// supp ν} with inf ∅ = 1, and the left-continuous version h̄_ν^+ which sends
/// (a, b] to b for every gap (a, b).
Rational h_map(const SupportInfo& s, const Rational& x, HVariant v);
Rational h_map(const StepCDF& nu, const Rational& x, HVariant v);

/// Image of mu under (x, y) -> (h(x), y) with h taken for the right marginal.
/// Throws InvariantError if an image point leaves the triangle.
AtomicMeasure push_h(const AtomicMeasure& mu, HVariant v);
MixedMeasure push_h(const StepKernelMeasure& mu, HVariant v);
MixedMeasure push_h(const MixedMeasure& mu, HVariant v);

/// Replaces the conditional on every gap of supp μ_R by its average over the
/// gap.
StepKernelMeasure project_star(const StepKernelMeasure& mu);

/// Measure with Lebesgue left marginal generating the same random interval
/// order: x -> F_L(x-) + U ΔF_L(x) and y -> F_L(y).
StepKernelMeasure left_uniformize(const MixedMeasure& mu);
StepKernelMeasure left_uniformize(const AtomicMeasure& mu);

/// Same poset limit, decided by comparing projections.
bool equivalent(const StepKernelMeasure& a, const StepKernelMeasure& b);

/// Same decision by comparing the h^- pushforwards.
bool equivalent_via_h_minus(const StepKernelMeasure& a, const StepKernelMeasure& b);

}  // namespace ordlim
