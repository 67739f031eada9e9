#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/poset.hpp"

namespace ordlim {

/// Canonical isomorphism-class key of a poset together with its automorphism
/// count (the number of relabellings attaining the key).
struct CanonicalForm {
    std::string code;
    std::size_t automorphisms = 0;
};

/// Lexicographically maximal relation string over all relabellings that list
/// points by a refined (d-, d+) profile. Intended for small posets.
CanonicalForm canonical_form(const FinitePoset& p);

struct CatalogEntry {
    std::size_t id = 0;
    FinitePoset poset;
    std::string code;
    std::size_t automorphisms = 0;
};

/// One representative per isomorphism class of posets of sizes 1..max_size,
/// ordered by (size, number of relations, canonical code).
class PosetCatalog {
public:
    PosetCatalog() = default;
    PosetCatalog(std::size_t max_size, std::vector<CatalogEntry> entries);

    std::size_t max_size() const { return max_size_; }
    std::size_t size() const { return entries_.size(); }
    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry& operator[](std::size_t id) const { return entries_[id]; }

    /// Entries with exactly `n` points.
    std::vector<const CatalogEntry*> of_size(std::size_t n) const;

    /// Id of the class containing `p`, if its size is covered.
    std::optional<std::size_t> find(const FinitePoset& p) const;

private:
    std::size_t max_size_ = 0;
    std::vector<CatalogEntry> entries_;
    std::map<std::string, std::size_t> by_code_;
};

/// Exhaustive enumeration. Throws SizeLimit when max_size > 7 or InputError
/// when max_size == 0.
PosetCatalog enumerate_posets(std::size_t max_size);

/// Process-wide cached catalog up to size 6 (sizes 1..6 all covered).
const PosetCatalog& standard_catalog();

}  // namespace ordlim
