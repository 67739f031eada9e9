#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ordlim/bitmatrix.hpp"

namespace ordlim {

enum class Sign { minus, plus };

using Pair = std::pair<std::size_t, std::size_t>;

/// A strict partial order on the points 0..n-1.
///
/// The full order matrix is stored (not just covers) together with its
/// transpose, so comparability queries are O(1) and predecessor/successor
/// sets are available as bit rows. Values are immutable after construction.
///
/// Indices are 0-based everywhere in the library; the text formats in io.hpp
/// are 1-based.
class FinitePoset {
public:
    /// Transitive closure of `pairs` (i, j) meaning i < j.
    /// Throws CycleError if the closure is not antisymmetric/irreflexive.
    static FinitePoset from_relations(std::size_t n, std::span<const Pair> pairs);

    /// Validates `rel` as-is. Throws CycleError for a reflexive or symmetric
    /// entry and NotTransitive when the matrix is not closed.
    static FinitePoset from_matrix(BitMatrix rel);

    /// Order generated by i < j iff right[i] < left[j]. Any such relation is a
    /// strict order (an interval order) provided left[i] <= right[i], which is
    /// the only thing checked; throws NotTransitive otherwise.
    static FinitePoset from_intervals(std::span<const double> left, std::span<const double> right);

    static FinitePoset chain(std::size_t n);
    static FinitePoset antichain(std::size_t n);
    /// 2+2: 0 < 1 and 2 < 3 only.
    static FinitePoset two_plus_two();
    /// 3+1: 0 < 1 < 2 with 3 isolated.
    static FinitePoset three_plus_one();
    /// Star Q_k^-: leaves 0..k-1 all below the centre k.
    static FinitePoset star_minus(std::size_t k);
    /// Star Q_k^+: the centre 0 below leaves 1..k.
    static FinitePoset star_plus(std::size_t k);

    FinitePoset() = default;

    std::size_t size() const { return rel_.size(); }
    bool less(std::size_t i, std::size_t j) const { return rel_.test(i, j); }
    bool comparable(std::size_t i, std::size_t j) const { return less(i, j) || less(j, i); }

    /// Bit row of {j : i < j}.
    std::span<const Word> successors(std::size_t i) const { return rel_.row(i); }
    /// Bit row of {j : j < i}.
    std::span<const Word> predecessors(std::size_t i) const { return inv_.row(i); }

    const BitMatrix& matrix() const { return rel_; }
    std::size_t relation_count() const { return rel_.count(); }

    /// Cover pairs (transitive reduction), sorted lexicographically.
    std::vector<Pair> covers() const;

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.rel_ == b.rel_; }

private:
    struct Trusted {};
    FinitePoset(BitMatrix rel, Trusted);

    friend FinitePoset make_trusted_poset(BitMatrix rel);

    BitMatrix rel_;
    BitMatrix inv_;
};

/// Wraps a matrix already known to be a strict order (library-internal use).
FinitePoset make_trusted_poset(BitMatrix rel);

enum class OrderDefect { none, reflexive, asymmetric, intransitive };
OrderDefect check_strict_order(const BitMatrix& rel);

FinitePoset reflect(const FinitePoset& p);

/// Restriction to `points`, reindexed in the given order. Throws EmptySubset.
FinitePoset induced(const FinitePoset& p, std::span<const std::size_t> points);

std::size_t degree(const FinitePoset& p, std::size_t i, Sign sign);
std::vector<std::size_t> degrees(const FinitePoset& p, Sign sign);

bool is_isomorphic(const FinitePoset& p, const FinitePoset& q);

/// Number of order automorphisms.
std::size_t automorphism_count(const FinitePoset& p);

}  // namespace ordlim
