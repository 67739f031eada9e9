#include "ordlim/kernel.hpp"

#include <algorithm>

#include "ordlim/errors.hpp"

namespace ordlim {

KernelModel KernelModel::wg(MonotoneRC g)
{
    if (!validate_g(g)) throw InputError("W_g needs a valid monotone g above the diagonal");
    KernelModel k;
    k.kind_ = KernelKind::wg;
    k.name_ = "wg";
    k.g_ = std::make_shared<const MonotoneRC>(std::move(g));
    return k;
}

KernelModel KernelModel::wc(const Rational& c)
{
    KernelModel k = wg(MonotoneRC::shift(c));
    k.name_ = "wc(" + to_string(c) + ")";
    return k;
}

KernelModel KernelModel::wtilde_r(RateFunction r)
{
    KernelModel k;
    k.kind_ = KernelKind::wtilde_r;
    k.name_ = "wtilde_r";
    k.r_ = std::make_shared<const RateFunction>(std::move(r));
    return k;
}

KernelModel KernelModel::measure(MixedMeasure mu)
{
    KernelModel k;
    k.kind_ = KernelKind::measure;
    k.name_ = "measure";
    auto comp = std::make_shared<std::vector<double>>();
    auto conds = std::make_shared<std::vector<std::vector<double>>>();
    Rational acc = 0;
    for (const auto& c : mu.pieces()) {
        acc += c.hi - c.lo;
        comp->push_back(to_double(acc));
        std::vector<double> cdf;
        Rational q = 0;
        for (const auto& [y, p] : c.cond) {
            q += p;
            cdf.push_back(to_double(q));
        }
        conds->push_back(std::move(cdf));
    }
    for (const auto& a : mu.atoms()) {
        acc += a.w;
        comp->push_back(to_double(acc));
    }
    k.mu_ = std::make_shared<const MixedMeasure>(std::move(mu));
    k.component_cdf_ = std::move(comp);
    k.cond_cdf_ = std::move(conds);
    return k;
}

KernelModel KernelModel::custom(std::function<double(double, double)> w, bool indicator, std::string name)
{
    KernelModel k;
    k.kind_ = KernelKind::custom;
    k.name_ = std::move(name);
    k.w_ = std::move(w);
    k.indicator_ = indicator;
    return k;
}

namespace {

std::size_t pick(const std::vector<double>& cdf, double u)
{
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return cdf.size() - 1;
    return static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

KernelPoint KernelModel::draw(const SeededRng& points, std::uint64_t i) const
{
    const double u0 = points.uniform(3 * i);
    if (kind_ != KernelKind::measure) return KernelPoint{u0, u0};

    const std::size_t c = pick(*component_cdf_, u0);
    const auto& pieces = mu_->pieces();
    if (c < pieces.size()) {
        const Cell& cell = pieces[c];
        const double lo = to_double(cell.lo);
        const double hi = to_double(cell.hi);
        const double x = lo + (hi - lo) * points.uniform(3 * i + 1);
        const std::size_t j = pick((*cond_cdf_)[c], points.uniform(3 * i + 2));
        return KernelPoint{x, to_double(cell.cond[j].first)};
    }
    const Atom& a = mu_->atoms()[c - pieces.size()];
    return KernelPoint{to_double(a.x), to_double(a.y)};
}

std::pair<double, double> KernelModel::interval(const KernelPoint& p) const
{
    switch (kind_) {
    case KernelKind::wg: return {p.x, g_->eval(p.x)};
    case KernelKind::wtilde_r: {
        const double r = r_->cumulative(p.x);
        return {r, r + 1.0};
    }
    case KernelKind::measure: return {p.x, p.y};
    case KernelKind::custom: break;
    }
    throw InputError("custom kernels have no interval form");
}

double KernelModel::value(const KernelPoint& a, const KernelPoint& b) const
{
    if (kind_ == KernelKind::custom) return w_(a.x, b.x);
    return interval(a).second < interval(b).first ? 1.0 : 0.0;
}

}  // namespace ordlim
