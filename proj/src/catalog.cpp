#include "ordlim/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ordlim/errors.hpp"

namespace ordlim {

namespace {

using Profile = std::pair<std::size_t, std::size_t>;

// Refined vertex invariant: own profile plus sorted profiles of predecessors
// and successors.
std::vector<std::size_t> vertex_classes(const FinitePoset& p)
{
    const std::size_t n = p.size();
    const auto dm = degrees(p, Sign::minus);
    const auto dp = degrees(p, Sign::plus);
    using Key = std::tuple<Profile, std::vector<Profile>, std::vector<Profile>>;
    std::vector<Key> keys(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Profile> below, above;
        for (std::size_t u = 0; u < n; ++u) {
            if (p.less(u, v)) below.emplace_back(dm[u], dp[u]);
            if (p.less(v, u)) above.emplace_back(dm[u], dp[u]);
        }
        std::sort(below.begin(), below.end());
        std::sort(above.begin(), above.end());
        keys[v] = Key{Profile{dm[v], dp[v]}, std::move(below), std::move(above)};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> cls(n);
    for (std::size_t v = 0; v < n; ++v)
        cls[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    return cls;
}

// Branch and bound for the maximal code. The code lists, for each position d,
// the 2d bits relating the point at d to the points at 0..d-1, so every
// partial labelling fixes a prefix.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const FinitePoset& p) : p_(p), n_(p.size()), cls_(vertex_classes(p))
    {
        slot_class_ = cls_;
        std::sort(slot_class_.begin(), slot_class_.end());
        perm_.resize(n_);
        used_.assign(n_, false);
        current_.reserve(n_ * n_);
    }

    CanonicalForm run()
    {
        extend(0);
        CanonicalForm out;
        out.code = std::to_string(n_) + ":" + best_;
        out.automorphisms = ties_;
        return out;
    }

private:
    // Prefixes are compared with the current best at every level; the best
    // may change while a branch is still open.
    void extend(std::size_t depth)
    {
        if (depth == n_) {
            const int c = have_best_ ? current_.compare(best_) : 1;
            if (c > 0) {
                best_ = current_;
                have_best_ = true;
                ties_ = 1;
            } else if (c == 0) {
                ++ties_;
            }
            return;
        }
        for (std::size_t v = 0; v < n_; ++v) {
            if (used_[v] || cls_[v] != slot_class_[depth]) continue;
            const std::size_t mark = current_.size();
            for (std::size_t k = 0; k < depth; ++k) {
                current_.push_back(p_.less(perm_[k], v) ? '1' : '0');
                current_.push_back(p_.less(v, perm_[k]) ? '1' : '0');
            }
            const bool prune = have_best_ && current_.compare(0, current_.size(), best_, 0, current_.size()) < 0;
            if (!prune) {
                perm_[depth] = v;
                used_[v] = true;
                extend(depth + 1);
                used_[v] = false;
            }
            current_.resize(mark);
        }
    }

    const FinitePoset& p_;
    std::size_t n_;
    std::vector<std::size_t> cls_;
    std::vector<std::size_t> slot_class_;
    std::vector<std::size_t> perm_;
    std::vector<bool> used_;
    std::string current_;
    std::string best_;
    bool have_best_ = false;
    std::size_t ties_ = 0;
};

std::vector<std::vector<std::size_t>> down_sets(const FinitePoset& p)
{
    const std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        bool closed = true;
        for (std::size_t y = 0; y < n && closed; ++y) {
            if (!((mask >> y) & 1U)) continue;
            for (std::size_t z = 0; z < n && closed; ++z)
                if (p.less(z, y) && !((mask >> z) & 1U)) closed = false;
        }
        if (!closed) continue;
        std::vector<std::size_t> d;
        for (std::size_t y = 0; y < n; ++y)
            if ((mask >> y) & 1U) d.push_back(y);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const FinitePoset& p) { return CanonicalSearch(p).run(); }

PosetCatalog::PosetCatalog(std::size_t max_size, std::vector<CatalogEntry> entries)
    : max_size_(max_size), entries_(std::move(entries))
{
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i].id = i;
        by_code_.emplace(entries_[i].code, i);
    }
}

std::vector<const CatalogEntry*> PosetCatalog::of_size(std::size_t n) const
{
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_)
        if (e.poset.size() == n) out.push_back(&e);
    return out;
}

std::optional<std::size_t> PosetCatalog::find(const FinitePoset& p) const
{
    if (p.size() == 0 || p.size() > max_size_) return std::nullopt;
    auto it = by_code_.find(canonical_form(p).code);
    if (it == by_code_.end()) return std::nullopt;
    return it->second;
}

PosetCatalog enumerate_posets(std::size_t max_size)
{
    if (max_size == 0) throw InputError("enumerate_posets: max_size must be at least 1");
    if (max_size > 7) throw SizeLimit("enumerate_posets: max_size " + std::to_string(max_size) + " exceeds 7");

    std::vector<CatalogEntry> all;
    std::vector<FinitePoset> level{FinitePoset::antichain(1)};
    {
        auto cf = canonical_form(level.front());
        all.push_back({0, level.front(), cf.code, cf.automorphisms});
    }
    for (std::size_t n = 2; n <= max_size; ++n) {
        // Every poset on n points arises from one on n-1 points by adding a
        // new maximal point above a down-set.
        std::map<std::string, CatalogEntry> found;
        for (const auto& base : level) {
            for (const auto& d : down_sets(base)) {
                BitMatrix rel(n);
                for (std::size_t i = 0; i < n - 1; ++i)
                    for (std::size_t j = 0; j < n - 1; ++j)
                        if (base.less(i, j)) rel.set(i, j);
                for (std::size_t y : d) rel.set(y, n - 1);
                auto q = make_trusted_poset(std::move(rel));
                auto cf = canonical_form(q);
                if (!found.count(cf.code)) found.emplace(cf.code, CatalogEntry{0, q, cf.code, cf.automorphisms});
            }
        }
        std::vector<CatalogEntry> fresh;
        for (auto& [code, e] : found) fresh.push_back(std::move(e));
        std::sort(fresh.begin(), fresh.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
            const auto ra = a.poset.relation_count(), rb = b.poset.relation_count();
            return ra != rb ? ra < rb : a.code < b.code;
        });
        level.clear();
        for (auto& e : fresh) {
            level.push_back(e.poset);
            all.push_back(std::move(e));
        }
    }
    return PosetCatalog(max_size, std::move(all));
}

const PosetCatalog& standard_catalog()
{
    static const PosetCatalog catalog = enumerate_posets(6);
    return catalog;
}

}  // namespace ordlim
