#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "ordlim/measures.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/semiorders.hpp"

namespace ordlim {

enum class KernelKind { wg, wtilde_r, measure, custom };

/// A random point of the ground space: x for kernels on [0,1], the interval
/// [x, y] for measures on the triangle.
struct KernelPoint {
    double x = 0;
    double y = 0;
};

/// A kernel together with the law of its points.
///
/// The built-in kinds are order indicators with an interval form: i < j iff
/// right(X_i) < left(X_j). W_g uses [x, g(x)], W̃_r uses [R(x), R(x) + 1] and
/// a measure uses the drawn interval itself.
class KernelModel {
public:
    static KernelModel wg(MonotoneRC g);
    /// W_c = W_g for g = g_c.
    static KernelModel wc(const Rational& c);
    static KernelModel wtilde_r(RateFunction r);
    static KernelModel measure(MixedMeasure mu);
    static KernelModel measure(const StepKernelMeasure& mu) { return measure(to_mixed(mu)); }
    static KernelModel measure(const AtomicMeasure& mu) { return measure(to_mixed(mu)); }
    /// Arbitrary [0,1]-valued kernel on uniform points. The sampler does not
    /// assume it defines an order.
    static KernelModel custom(std::function<double(double, double)> w, bool indicator, std::string name);

    KernelKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool indicator() const { return kind_ != KernelKind::custom || indicator_; }

    /// Point i of a stream (uses indices 3i .. 3i + 2).
    KernelPoint draw(const SeededRng& points, std::uint64_t i) const;

    double value(const KernelPoint& a, const KernelPoint& b) const;

    bool has_interval_form() const { return kind_ != KernelKind::custom; }
    std::pair<double, double> interval(const KernelPoint& p) const;

private:
    KernelKind kind_ = KernelKind::custom;
    std::string name_;
    std::shared_ptr<const MonotoneRC> g_;
    std::shared_ptr<const RateFunction> r_;
    std::shared_ptr<const MixedMeasure> mu_;
    std::function<double(double, double)> w_;
    bool indicator_ = false;

    // Cumulative masses for drawing from a mixed measure.
    std::shared_ptr<const std::vector<double>> component_cdf_;
    std::shared_ptr<const std::vector<std::vector<double>>> cond_cdf_;
};

}  // namespace ordlim
