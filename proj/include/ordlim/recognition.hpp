#pragma once

#include <cstddef>
#include <vector>

#include "ordlim/measures.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rational.hpp"

namespace ordlim {

/// No induced 2+2.
bool is_interval_order(const FinitePoset& p);

/// Down-sets {y : y < x} totally ordered by inclusion.
bool downset_chain_check(const FinitePoset& p);

/// No induced 2+2 and no induced 3+1.
bool is_semiorder(const FinitePoset& p);

/// O(n^2 · n/64) semiorder test for large inputs: down-sets nested and, in
/// the rank order of interval_representation, up-sets non-increasing.
bool semiorder_rank_check(const FinitePoset& p);

/// Intervals [a_i, b_i] realizing P: i < j iff b_i < a_j. Point i has rank
/// rank[i] (1-based) and a_i = rank[i] / n.
struct IntervalRepresentation {
    std::size_t n = 0;
    std::vector<std::size_t> rank;
    std::vector<Rational> a;
    std::vector<Rational> b;
};

/// Ranks by (|D(x)| ascending, |U(x)| descending, index); b_x = (m_x - 1)/n
/// for m_x the least rank in U(x), or 1 when U(x) is empty. Throws
/// NotIntervalOrder, or InternalInvariantError if the result fails its own
/// realization check (or, for semiorders, monotonicity of b in rank order).
IntervalRepresentation interval_representation(const FinitePoset& p);

/// Whether the representation realizes P.
bool realizes(const IntervalRepresentation& r, const FinitePoset& p);

/// Atoms (a_i, b_i) of weight 1/n.
AtomicMeasure empirical_measure(const IntervalRepresentation& r);

/// The empirical measure spread to Lebesgue left marginal: cell
/// [(rank - 1)/n, rank/n] carries δ_b.
StepKernelMeasure as_step_measure(const IntervalRepresentation& r);

}  // namespace ordlim
