#include "ordlim/cdf.hpp"

#include <algorithm>
#include <map>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

std::vector<Knot> normalize(std::vector<Knot> in)
{
    if (in.size() < 2 || in.front().x != 0 || in.back().x != 1)
        throw InputError("piecewise-linear function needs knots at 0 and 1");
    for (std::size_t i = 1; i < in.size(); ++i)
        if (!(in[i - 1].x < in[i].x)) throw InputError("knot positions must be strictly increasing");

    // Drop interior knots that neither jump nor bend.
    std::vector<Knot> out;
    out.reserve(in.size());
    out.push_back(in.front());
    for (std::size_t i = 1; i + 1 < in.size(); ++i) {
        const Knot& k = in[i];
        const Knot& prev = out.back();
        const Knot& next = in[i + 1];
        if (k.left == k.right) {
            const Rational lhs = (k.right - prev.right) * (next.x - prev.x);
            const Rational rhs = (next.left - prev.right) * (k.x - prev.x);
            if (lhs == rhs) continue;
        }
        out.push_back(k);
    }
    out.push_back(in.back());
    return out;
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Knot> knots) : knots_(normalize(std::move(knots))) {}

std::size_t PiecewiseLinear::segment_of(const Rational& x) const
{
    // Last knot with knot.x <= x.
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](const Rational& v, const Knot& k) { return v < k.x; });
    if (it == knots_.begin()) return 0;
    return static_cast<std::size_t>(it - knots_.begin()) - 1;
}

Rational PiecewiseLinear::operator()(const Rational& x) const
{
    if (x <= 0) return knots_.front().right;
    if (x >= 1) return knots_.back().right;
    const std::size_t i = segment_of(x);
    const Knot& a = knots_[i];
    if (a.x == x) return a.right;
    const Knot& b = knots_[i + 1];
    return a.right + (b.left - a.right) * (x - a.x) / (b.x - a.x);
}

Rational PiecewiseLinear::left_limit(const Rational& x) const
{
    if (x <= 0) return knots_.front().left;
    if (x > 1) return knots_.back().right;
    const std::size_t i = segment_of(x);
    if (knots_[i].x == x) return knots_[i].left;
    return (*this)(x);
}

double PiecewiseLinear::eval(double x) const
{
    if (x <= 0.0) return to_double(knots_.front().right);
    if (x >= 1.0) return to_double(knots_.back().right);
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x,
                               [](double v, const Knot& k) { return v < to_double(k.x); });
    const std::size_t i = static_cast<std::size_t>(it - knots_.begin()) - 1;
    const Knot& a = knots_[i];
    const double ax = to_double(a.x);
    if (ax == x) return to_double(a.right);
    const Knot& b = knots_[i + 1];
    const double slope = to_double((b.left - a.right) / (b.x - a.x));
    return to_double(a.right) + slope * (x - ax);
}

Rational PiecewiseLinear::slope_after(std::size_t i) const
{
    if (i + 1 >= knots_.size()) return 0;
    return (knots_[i + 1].left - knots_[i].right) / (knots_[i + 1].x - knots_[i].x);
}

bool PiecewiseLinear::nondecreasing() const
{
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (knots_[i].left > knots_[i].right) return false;
        if (i + 1 < knots_.size() && knots_[i].right > knots_[i + 1].left) return false;
    }
    return true;
}

std::vector<Vertex> PiecewiseLinear::completed_graph() const
{
    std::vector<Vertex> out;
    for (const Knot& k : knots_) {
        out.emplace_back(k.x, k.left);
        if (k.right != k.left) out.emplace_back(k.x, k.right);
    }
    return out;
}

PiecewiseLinear PiecewiseLinear::from_completed_graph(std::span<const Vertex> chain)
{
    std::vector<Knot> knots;
    for (const auto& [x, y] : chain) {
        if (!knots.empty() && knots.back().x == x) {
            knots.back().right = y;
        } else {
            if (!knots.empty() && x < knots.back().x)
                throw InputError("completed graph is not monotone in x");
            knots.push_back(Knot{x, y, y});
        }
    }
    return PiecewiseLinear(std::move(knots));
}

PiecewiseLinear PiecewiseLinear::combine(std::span<const std::pair<Rational, PiecewiseLinear>> terms)
{
    std::vector<Rational> xs;
    for (const auto& [w, f] : terms)
        for (const Knot& k : f.knots()) xs.push_back(k.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Knot> knots;
    knots.reserve(xs.size());
    for (const Rational& x : xs) {
        Knot k{x, 0, 0};
        for (const auto& [w, f] : terms) {
            k.left += w * f.left_limit(x);
            k.right += w * f(x);
        }
        knots.push_back(std::move(k));
    }
    return PiecewiseLinear(std::move(knots));
}

StepCDF StepCDF::from_function(PiecewiseLinear f)
{
    const auto& k = f.knots();
    if (k.empty()) throw InputError("empty distribution function");
    if (k.front().left != 0) throw InputError("distribution function must vanish left of 0");
    if (k.back().right != 1) throw InputError("distribution function must reach 1 at t = 1");
    if (!f.nondecreasing()) throw InputError("distribution function must be nondecreasing");
    for (const Knot& kn : k)
        if (kn.left < 0 || kn.right > 1) throw InputError("distribution function leaves [0,1]");
    return StepCDF(std::move(f));
}

StepCDF StepCDF::point_mass(const Rational& t)
{
    const std::pair<Rational, Rational> atom{t, 1};
    return from_atoms(std::span(&atom, 1));
}

StepCDF StepCDF::uniform() { return from_function(PiecewiseLinear({{0, 0, 0}, {1, 1, 1}})); }

StepCDF StepCDF::uniform_on(const Rational& a, const Rational& b)
{
    if (!(0 <= a && a < b && b <= 1)) throw InputError("uniform_on needs 0 <= a < b <= 1");
    std::vector<Knot> k{{0, 0, 0}};
    if (a > 0) k.push_back({a, 0, 0});
    if (b < 1) k.push_back({b, 1, 1});
    k.push_back({1, 1, 1});
    if (b == 1) k.back() = {1, 1, 1};
    return from_function(PiecewiseLinear(std::move(k)));
}

StepCDF StepCDF::from_atoms(std::span<const std::pair<Rational, Rational>> atoms)
{
    std::map<Rational, Rational> mass;
    Rational total = 0;
    for (const auto& [t, w] : atoms) {
        if (t < 0 || t > 1) throw InputError("atom outside [0,1]");
        if (w < 0) throw InputError("negative atom weight");
        if (w == 0) continue;
        mass[t] += w;
        total += w;
    }
    if (total != 1) throw InputError("atom weights sum to " + to_string(total) + ", not 1");
    mass.try_emplace(Rational(0), 0);
    mass.try_emplace(Rational(1), 0);
    std::vector<Knot> knots;
    Rational acc = 0;
    for (const auto& [t, w] : mass) {
        Knot k{t, acc, acc + w};
        acc += w;
        knots.push_back(std::move(k));
    }
    return from_function(PiecewiseLinear(std::move(knots)));
}

StepCDF StepCDF::mixture(std::span<const std::pair<Rational, StepCDF>> parts)
{
    std::vector<std::pair<Rational, PiecewiseLinear>> terms;
    Rational total = 0;
    for (const auto& [w, f] : parts) {
        if (w < 0) throw InputError("negative mixture weight");
        total += w;
        terms.emplace_back(w, f.function());
    }
    if (total != 1) throw InputError("mixture weights must sum to 1");
    return from_function(PiecewiseLinear::combine(terms));
}

Rational ks_distance(const StepCDF& f, const StepCDF& g)
{
    std::vector<Rational> xs;
    for (const Knot& k : f.knots()) xs.push_back(k.x);
    for (const Knot& k : g.knots()) xs.push_back(k.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    // The difference is linear between merged knots, so its sup is attained
    // at a knot value or a left limit.
    Rational best = 0;
    for (const Rational& x : xs) {
        Rational a = abs(f(x) - g(x));
        Rational b = abs(f.left_limit(x) - g.left_limit(x));
        if (a > best) best = a;
        if (b > best) best = b;
    }
    return best;
}

Rational moment(const StepCDF& f, unsigned k)
{
    auto power = [](const Rational& x, unsigned e) {
        Rational r = 1;
        for (unsigned i = 0; i < e; ++i) r *= x;
        return r;
    };
    const auto& knots = f.knots();
    Rational m = 0;
    for (std::size_t i = 0; i < knots.size(); ++i) {
        m += (knots[i].right - knots[i].left) * power(knots[i].x, k);
        if (i + 1 < knots.size()) {
            const Rational s = f.function().slope_after(i);
            if (s != 0)
                m += s * (power(knots[i + 1].x, k + 1) - power(knots[i].x, k + 1)) / Rational(k + 1);
        }
    }
    return m;
}

}  // namespace ordlim
