#include "ordlim/semiorders.hpp"

#include <algorithm>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

PiecewiseLinear with_left_at_zero(const PiecewiseLinear& f, const Rational& left0)
{
    auto k = f.knots();
    k.front().left = left0;
    return PiecewiseLinear(std::move(k));
}

std::vector<Vertex> reflect_chain(const std::vector<Vertex>& chain)
{
    std::vector<Vertex> out;
    out.reserve(chain.size());
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) out.emplace_back(1 - it->second, 1 - it->first);
    return out;
}

}  // namespace

MonotoneRC::MonotoneRC(PiecewiseLinear f) : f_(with_left_at_zero(f, f.knots().front().right)) {}

MonotoneRC MonotoneRC::identity() { return MonotoneRC(PiecewiseLinear({{0, 0, 0}, {1, 1, 1}})); }

MonotoneRC MonotoneRC::constant_one() { return MonotoneRC(PiecewiseLinear({{0, 1, 1}, {1, 1, 1}})); }

MonotoneRC MonotoneRC::shift(const Rational& c)
{
    if (c < 0 || c > 1) throw InputError("shift parameter must lie in [0,1]");
    if (c == 0) return identity();
    if (c == 1) return constant_one();
    return MonotoneRC(PiecewiseLinear({{0, c, c}, {1 - c, 1, 1}, {1, 1, 1}}));
}

RateFunction::RateFunction(std::vector<RatePiece> pieces) : pieces_(std::move(pieces))
{
    if (pieces_.empty() || pieces_.front().lo != 0 || pieces_.back().hi != 1)
        throw InputError("rate pieces must cover [0,1]");
    prefix_.push_back(0);
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        const auto& p = pieces_[i];
        if (!(p.lo < p.hi)) throw InputError("empty rate piece");
        if (i > 0 && p.lo != pieces_[i - 1].hi) throw InputError("rate pieces must be contiguous");
        if (p.value < 0) throw InputError("rate must be nonnegative");
        prefix_.push_back(prefix_.back() + p.value * (p.hi - p.lo));
    }
}

RateFunction RateFunction::constant(const Rational& r) { return RateFunction({{0, 1, r}}); }

Rational RateFunction::cumulative(const Rational& x) const
{
    if (x <= 0) return 0;
    if (x >= 1) return prefix_.back();
    auto it = std::upper_bound(pieces_.begin(), pieces_.end(), x,
                               [](const Rational& v, const RatePiece& p) { return v < p.hi; });
    const std::size_t i = static_cast<std::size_t>(it - pieces_.begin());
    return prefix_[i] + pieces_[i].value * (x - pieces_[i].lo);
}

double RateFunction::cumulative(double x) const
{
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return to_double(prefix_.back());
    std::size_t i = 0;
    while (i + 1 < pieces_.size() && to_double(pieces_[i].hi) <= x) ++i;
    return to_double(prefix_[i]) + to_double(pieces_[i].value) * (x - to_double(pieces_[i].lo));
}

bool validate_g(const MonotoneRC& g)
{
    const auto& k = g.knots();
    if (!g.function().nondecreasing()) return false;
    if (k.back().right > 1) return false;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i].right < k[i].x) return false;
        if (i > 0 && k[i].left < k[i].x) return false;
    }
    return true;
}

StepCDF f_minus(const MonotoneRC& g)
{
    if (!validate_g(g)) throw InputError("f_minus: g is not a valid monotone function above the diagonal");
    return StepCDF::from_function(with_left_at_zero(g.function(), 0));
}

StepCDF f_plus(const MonotoneRC& g)
{
    const auto chain = f_minus(g).function().completed_graph();
    const auto reflected = reflect_chain(chain);
    return StepCDF::from_function(PiecewiseLinear::from_completed_graph(reflected));
}

MonotoneRC g_from_nu_minus(const StepCDF& nu)
{
    for (const Knot& k : nu.knots()) {
        if (k.right < k.x || (k.x > 0 && k.left < k.x))
            throw NotInPMinus("distribution falls below the uniform one at t = " + to_string(k.x));
    }
    return MonotoneRC(nu.function());
}

MonotoneRC g_from_f_plus(const StepCDF& fp)
{
    const auto reflected = reflect_chain(fp.function().completed_graph());
    MonotoneRC g(PiecewiseLinear::from_completed_graph(reflected));
    if (!validate_g(g)) throw NotInPMinus("reflected function drops below the diagonal");
    return g;
}

namespace {

// max{y in [0,1] : R(y) <= c}, for c < R(1).
Rational level_inverse(const RateFunction& r, const Rational& c)
{
    const auto& ps = r.pieces();
    for (std::size_t i = ps.size(); i-- > 0;) {
        const Rational at_lo = r.cumulative(ps[i].lo);
        if (at_lo <= c) {
            // R(hi) > c here, so the rate on this piece is positive.
            return ps[i].lo + (c - at_lo) / ps[i].value;
        }
    }
    return 0;
}

Rational rate_g(const RateFunction& r, const Rational& x)
{
    const Rational c = r.cumulative(x) + 1;
    if (c >= r.cumulative(Rational(1))) return 1;
    return level_inverse(r, c);
}

// Smallest and largest solutions of R(x) = c in [0,1], if any.
void level_solutions(const RateFunction& r, const Rational& c, std::vector<Rational>& out)
{
    if (c < 0 || c > r.cumulative(Rational(1))) return;
    for (const auto& p : r.pieces()) {
        const Rational a = r.cumulative(p.lo);
        const Rational b = r.cumulative(p.hi);
        if (c < a || c > b) continue;
        if (p.value == 0) {
            out.push_back(p.lo);
            out.push_back(p.hi);
        } else {
            out.push_back(p.lo + (c - a) / p.value);
        }
    }
}

}  // namespace

MonotoneRC g_from_rate(const RateFunction& r)
{
    // g is linear between consecutive candidate breakpoints: knots of R and
    // preimages under R of (knot value - 1), including the level R(1) - 1 at
    // which g reaches 1.
    std::vector<Rational> bps{0, 1};
    for (const auto& p : r.pieces()) {
        bps.push_back(p.lo);
        level_solutions(r, r.cumulative(p.lo) - 1, bps);
    }
    level_solutions(r, r.cumulative(Rational(1)) - 1, bps);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    std::vector<Knot> knots;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        Knot k{bps[i], 0, rate_g(r, bps[i])};
        if (i == 0) {
            k.left = k.right;
        } else {
            // Left limit by extrapolating the segment through two interior points.
            const Rational& a = bps[i - 1];
            const Rational& b = bps[i];
            const Rational p1 = a + (b - a) / 3;
            const Rational p2 = a + 2 * (b - a) / 3;
            const Rational v1 = rate_g(r, p1);
            const Rational v2 = rate_g(r, p2);
            k.left = v2 + (v2 - v1) * (b - p2) / (p2 - p1);
        }
        knots.push_back(std::move(k));
    }
    // The segment into a knot must also start at the previous knot's value.
    for (std::size_t i = 1; i < knots.size(); ++i) {
        const Rational& a = bps[i - 1];
        const Rational& b = bps[i];
        const Rational p1 = a + (b - a) / 3;
        const Rational p2 = a + 2 * (b - a) / 3;
        const Rational v1 = rate_g(r, p1);
        const Rational v2 = rate_g(r, p2);
        const Rational start = v1 - (v2 - v1) * (p1 - a) / (p2 - p1);
        if (start != knots[i - 1].right)
            throw InternalInvariantError("rate threshold function is not linear between breakpoints");
    }
    return MonotoneRC(PiecewiseLinear(std::move(knots)));
}

bool kernel_wg(const MonotoneRC& g, const Rational& x, const Rational& y) { return g(x) < y; }

}  // namespace ordlim
