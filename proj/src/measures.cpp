#include "ordlim/measures.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

Conditional normalize_conditional(Conditional c)
{
    std::map<Rational, Rational> merged;
    for (auto& [y, p] : c) {
        if (y < 0 || y > 1) throw InputError("conditional atom " + to_string(y) + " outside [0,1]");
        if (p < 0) throw InputError("negative conditional weight");
        if (p == 0) continue;
        merged[y] += p;
    }
    Conditional out;
    out.reserve(merged.size());
    for (auto& [y, p] : merged) out.emplace_back(y, p);
    return out;
}

Rational total(const Conditional& c)
{
    Rational t = 0;
    for (const auto& [y, p] : c) t += p;
    return t;
}

void check_cell(const Cell& c)
{
    if (!(c.lo < c.hi)) throw InputError("cell [" + to_string(c.lo) + ", " + to_string(c.hi) + "] is empty");
    if (c.lo < 0 || c.hi > 1) throw InputError("cell outside [0,1]");
    if (c.cond.empty() || total(c.cond) != 1) throw InputError("cell conditional must have total mass 1");
    if (c.cond.front().first < c.hi)
        throw InputError("conditional atom " + to_string(c.cond.front().first) + " lies below cell end " +
                         to_string(c.hi));
}

// Merges touching cells that carry the same conditional.
std::vector<Cell> merge_cells(std::vector<Cell> cells)
{
    std::vector<Cell> out;
    for (auto& c : cells) {
        if (!out.empty() && out.back().hi == c.lo && out.back().cond == c.cond)
            out.back().hi = c.hi;
        else
            out.push_back(std::move(c));
    }
    return out;
}

std::vector<Atom> normalize_atoms(std::vector<Atom> atoms)
{
    std::map<std::pair<Rational, Rational>, Rational> merged;
    for (auto& a : atoms) {
        if (!(0 <= a.x && a.x <= a.y && a.y <= 1))
            throw InputError("atom (" + to_string(a.x) + ", " + to_string(a.y) + ") outside the triangle");
        if (a.w < 0) throw InputError("negative atom weight");
        if (a.w == 0) continue;
        merged[{a.x, a.y}] += a.w;
    }
    std::vector<Atom> out;
    out.reserve(merged.size());
    for (auto& [xy, w] : merged) out.push_back(Atom{xy.first, xy.second, w});
    return out;
}

StepCDF cdf_of_y(const std::vector<std::pair<Rational, Rational>>& mass)
{
    return StepCDF::from_atoms(mass);
}

// Sorted distinct breakpoints of [lo, hi] refined by the given points.
std::vector<Rational> refine(const Rational& lo, const Rational& hi, const std::vector<Rational>& cuts)
{
    std::vector<Rational> pts{lo, hi};
    for (const auto& c : cuts)
        if (lo < c && c < hi) pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<Rational> gap_ends(const SupportInfo& s)
{
    std::vector<Rational> out;
    for (const auto& g : s.gaps) {
        out.push_back(g.lo);
        out.push_back(g.hi);
    }
    for (const auto& c : s.support) {
        out.push_back(c.lo);
        out.push_back(c.hi);
    }
    return out;
}

// Index of the gap containing the open interval (u, w), if any.
const Interval* gap_containing(const SupportInfo& s, const Rational& u, const Rational& w)
{
    for (const auto& g : s.gaps)
        if (g.lo <= u && w <= g.hi) return &g;
    return nullptr;
}

void check_variant(HVariant v)
{
    if (v == HVariant::plus)
        throw InputError("push_h is defined for the minus and bar_plus maps only");
}

// Pushes density-1 pieces forward: uniform parts inside gaps collapse to
// atoms, the rest is kept.
void push_pieces(const std::vector<Cell>& pieces, const SupportInfo& s, HVariant v, std::vector<Cell>& kept,
                 std::vector<Atom>& atoms)
{
    const auto cuts = gap_ends(s);
    for (const Cell& c : pieces) {
        const auto pts = refine(c.lo, c.hi, cuts);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Rational& u = pts[i];
            const Rational& w = pts[i + 1];
            if (const Interval* g = gap_containing(s, u, w)) {
                const Rational x = v == HVariant::minus ? g->lo : g->hi;
                for (const auto& [y, p] : c.cond) {
                    if (x > y)
                        throw InvariantError("pushforward sends mass to (" + to_string(x) + ", " + to_string(y) +
                                             "), outside the triangle");
                    atoms.push_back(Atom{x, y, (w - u) * p});
                }
            } else {
                kept.push_back(Cell{u, w, c.cond});
            }
        }
    }
}

void push_atoms(const std::vector<Atom>& in, const SupportInfo& s, HVariant v, std::vector<Atom>& out)
{
    for (const Atom& a : in) {
        const Rational x = h_map(s, a.x, v);
        if (x > a.y)
            throw InvariantError("pushforward sends atom (" + to_string(a.x) + ", " + to_string(a.y) +
                                 ") outside the triangle");
        out.push_back(Atom{x, a.y, a.w});
    }
}

}  // namespace

AtomicMeasure AtomicMeasure::from_atoms(std::vector<Atom> atoms)
{
    AtomicMeasure m;
    m.atoms_ = normalize_atoms(std::move(atoms));
    Rational t = 0;
    for (const auto& a : m.atoms_) t += a.w;
    if (t != 1) throw InputError("atom weights sum to " + to_string(t) + ", not 1");
    return m;
}

StepKernelMeasure StepKernelMeasure::from_cells(std::vector<Cell> cells)
{
    if (cells.empty()) throw InputError("step measure needs at least one cell");
    if (cells.front().lo != 0 || cells.back().hi != 1) throw InputError("cells must cover [0,1]");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        cells[i].cond = normalize_conditional(std::move(cells[i].cond));
        check_cell(cells[i]);
        if (i > 0 && cells[i].lo != cells[i - 1].hi) throw InputError("cells must be contiguous and ordered");
    }
    StepKernelMeasure m;
    m.cells_ = merge_cells(std::move(cells));
    return m;
}

StepKernelMeasure StepKernelMeasure::constant(const Rational& y)
{
    return from_cells({Cell{0, 1, {{y, 1}}}});
}

MixedMeasure MixedMeasure::from_parts(std::vector<Cell> pieces, std::vector<Atom> atoms)
{
    for (auto& c : pieces) {
        c.cond = normalize_conditional(std::move(c.cond));
        check_cell(c);
    }
    std::sort(pieces.begin(), pieces.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < pieces.size(); ++i)
        if (pieces[i].lo < pieces[i - 1].hi) throw InputError("uniform pieces overlap");
    MixedMeasure m;
    m.pieces_ = merge_cells(std::move(pieces));
    m.atoms_ = normalize_atoms(std::move(atoms));
    Rational t = 0;
    for (const auto& c : m.pieces_) t += c.hi - c.lo;
    for (const auto& a : m.atoms_) t += a.w;
    if (t != 1) throw InputError("mixed measure has total mass " + to_string(t) + ", not 1");
    return m;
}

MixedMeasure to_mixed(const StepKernelMeasure& mu) { return MixedMeasure::from_parts(mu.cells(), {}); }

MixedMeasure to_mixed(const AtomicMeasure& mu) { return MixedMeasure::from_parts({}, mu.atoms()); }

StepCDF right_marginal(const AtomicMeasure& mu)
{
    std::vector<std::pair<Rational, Rational>> mass;
    for (const auto& a : mu.atoms()) mass.emplace_back(a.y, a.w);
    return cdf_of_y(mass);
}

StepCDF right_marginal(const StepKernelMeasure& mu) { return right_marginal(to_mixed(mu)); }

StepCDF right_marginal(const MixedMeasure& mu)
{
    std::vector<std::pair<Rational, Rational>> mass;
    for (const auto& c : mu.pieces())
        for (const auto& [y, p] : c.cond) mass.emplace_back(y, (c.hi - c.lo) * p);
    for (const auto& a : mu.atoms()) mass.emplace_back(a.y, a.w);
    return cdf_of_y(mass);
}

StepCDF left_marginal(const AtomicMeasure& mu) { return left_marginal(to_mixed(mu)); }

StepCDF left_marginal(const MixedMeasure& mu)
{
    std::vector<Rational> xs{0, 1};
    for (const auto& c : mu.pieces()) {
        xs.push_back(c.lo);
        xs.push_back(c.hi);
    }
    for (const auto& a : mu.atoms()) xs.push_back(a.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto below = [&](const Rational& t, bool inclusive) {
        Rational f = 0;
        for (const auto& c : mu.pieces())
            if (c.lo < t) f += std::min(c.hi, t) - c.lo;
        for (const auto& a : mu.atoms())
            if (a.x < t || (inclusive && a.x == t)) f += a.w;
        return f;
    };
    std::vector<Knot> knots;
    for (const auto& x : xs) knots.push_back(Knot{x, below(x, false), below(x, true)});
    return StepCDF::from_function(PiecewiseLinear(std::move(knots)));
}

SupportInfo support_and_gaps(const StepCDF& nu)
{
    const auto& k = nu.knots();
    std::vector<Interval> comps;
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i].right > k[i].left) comps.push_back(Interval{k[i].x, k[i].x});
        if (i + 1 < k.size() && k[i + 1].left > k[i].right) comps.push_back(Interval{k[i].x, k[i + 1].x});
    }
    std::sort(comps.begin(), comps.end(),
              [](const Interval& a, const Interval& b) { return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi); });
    SupportInfo s;
    for (auto& c : comps) {
        if (!s.support.empty() && c.lo <= s.support.back().hi)
            s.support.back().hi = std::max(s.support.back().hi, c.hi);
        else
            s.support.push_back(c);
    }
    if (s.support.front().lo > 0) s.gaps.push_back(Interval{0, s.support.front().lo});
    for (std::size_t i = 0; i + 1 < s.support.size(); ++i)
        s.gaps.push_back(Interval{s.support[i].hi, s.support[i + 1].lo});
    if (s.support.back().hi < 1) s.gaps.push_back(Interval{s.support.back().hi, 1});
    return s;
}

Rational h_map(const SupportInfo& s, const Rational& x, HVariant v)
{
    for (const auto& g : s.gaps) {
        switch (v) {
        case HVariant::minus:
            if (g.lo < x && x <= g.hi) return g.lo;
            break;
        case HVariant::plus:
            if (g.lo <= x && x < g.hi) return g.hi;
            break;
        case HVariant::bar_plus:
            if (g.lo < x && x <= g.hi) return g.hi;
            break;
        }
    }
    return x;
}

Rational h_map(const StepCDF& nu, const Rational& x, HVariant v) { return h_map(support_and_gaps(nu), x, v); }

AtomicMeasure push_h(const AtomicMeasure& mu, HVariant v)
{
    check_variant(v);
    const auto s = support_and_gaps(right_marginal(mu));
    std::vector<Atom> out;
    push_atoms(mu.atoms(), s, v, out);
    return AtomicMeasure::from_atoms(std::move(out));
}

MixedMeasure push_h(const StepKernelMeasure& mu, HVariant v) { return push_h(to_mixed(mu), v); }

MixedMeasure push_h(const MixedMeasure& mu, HVariant v)
{
    check_variant(v);
    const auto s = support_and_gaps(right_marginal(mu));
    std::vector<Cell> kept;
    std::vector<Atom> atoms;
    push_pieces(mu.pieces(), s, v, kept, atoms);
    push_atoms(mu.atoms(), s, v, atoms);
    return MixedMeasure::from_parts(std::move(kept), std::move(atoms));
}

StepKernelMeasure project_star(const StepKernelMeasure& mu)
{
    const auto s = support_and_gaps(right_marginal(mu));

    std::vector<Conditional> averaged;
    for (const auto& g : s.gaps) {
        Conditional acc;
        for (const Cell& c : mu.cells()) {
            const Rational lo = std::max(c.lo, g.lo);
            const Rational hi = std::min(c.hi, g.hi);
            if (!(lo < hi)) continue;
            for (const auto& [y, p] : c.cond) acc.emplace_back(y, (hi - lo) * p / (g.hi - g.lo));
        }
        averaged.push_back(normalize_conditional(std::move(acc)));
    }

    const auto cuts = gap_ends(s);
    std::vector<Cell> out;
    for (const Cell& c : mu.cells()) {
        const auto pts = refine(c.lo, c.hi, cuts);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const Interval* g = gap_containing(s, pts[i], pts[i + 1]);
            const Conditional& cond =
                g ? averaged[static_cast<std::size_t>(g - s.gaps.data())] : c.cond;
            out.push_back(Cell{pts[i], pts[i + 1], cond});
        }
    }
    return StepKernelMeasure::from_cells(std::move(out));
}

StepKernelMeasure left_uniformize(const MixedMeasure& mu)
{
    const StepCDF f = left_marginal(mu);

    std::map<Rational, std::vector<const Atom*>> by_x;
    for (const auto& a : mu.atoms()) by_x[a.x].push_back(&a);
    std::vector<Rational> atom_x;
    for (const auto& [x, list] : by_x) atom_x.push_back(x);

    std::vector<Cell> cells;
    for (const Cell& c : mu.pieces()) {
        const auto pts = refine(c.lo, c.hi, atom_x);
        Conditional cond;
        for (const auto& [y, p] : c.cond) cond.emplace_back(f(y), p);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            cells.push_back(Cell{f(pts[i]), f.left_limit(pts[i + 1]), cond});
    }
    for (const auto& [x, list] : by_x) {
        const Rational lo = f.left_limit(x);
        const Rational hi = f(x);
        Conditional cond;
        for (const Atom* a : list) cond.emplace_back(f(a->y), a->w / (hi - lo));
        cells.push_back(Cell{lo, hi, std::move(cond)});
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.lo < b.lo; });
    return StepKernelMeasure::from_cells(std::move(cells));
}

StepKernelMeasure left_uniformize(const AtomicMeasure& mu) { return left_uniformize(to_mixed(mu)); }

bool equivalent(const StepKernelMeasure& a, const StepKernelMeasure& b) { return project_star(a) == project_star(b); }

bool equivalent_via_h_minus(const StepKernelMeasure& a, const StepKernelMeasure& b)
{
    return push_h(a, HVariant::minus) == push_h(b, HVariant::minus);
}

}  // namespace ordlim
