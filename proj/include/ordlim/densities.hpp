#pragma once

#include <cstdint>
#include <utility>

#include "ordlim/kernel.hpp"
#include "ordlim/measures.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rational.hpp"

namespace ordlim {

enum class DensityKind { hom, inj, ind };

/// Number of order-preserving maps Q -> P (hom), injective ones (inj) or
/// induced embeddings (ind). Backtracking over Q's points in decreasing
/// d- + d+ order with bit-row candidate sets.
BigInt count_maps(const FinitePoset& q, const FinitePoset& p, DensityKind kind);

/// Whether at least one such map exists; stops at the first one.
bool has_map(const FinitePoset& q, const FinitePoset& p, DensityKind kind);

/// hom: maps / |P|^|Q|; inj and ind: maps / (|P|)_|Q|, and 0 when |Q| > |P|.
Rational density(const FinitePoset& q, const FinitePoset& p, DensityKind kind);

/// (E (d_sign(X) / n)^k for uniform X, t(star_sign(k), P)). Throws InputError
/// unless 1 <= k <= 4.
std::pair<Rational, Rational> moment_identity_check(const FinitePoset& p, unsigned k, Sign sign);

struct McEstimate {
    double estimate = 0;
    double half_width_95 = 0;
};

/// Monte Carlo estimate of the integral over |Q| i.i.d. points of the product
/// of kernel values over the relations of Q (hom), or the induced version with
/// factors 1 - W for the other ordered pairs (ind). Sample s draws its points
/// from SeededRng(seed).trial(s), so the result does not depend on the worker
/// count. Throws InputError if samples < 100.
McEstimate kernel_density_mc(const FinitePoset& q, const KernelModel& w, std::size_t samples, std::uint64_t seed,
                             DensityKind kind = DensityKind::hom, std::size_t threads = 0);

/// Exact version for a finitely supported measure, summing over all m^|Q|
/// support tuples. Throws BudgetExceeded when m^|Q| > 10^7.
Rational kernel_density_atomic(const FinitePoset& q, const AtomicMeasure& mu, DensityKind kind = DensityKind::hom);

}  // namespace ordlim
