#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlim/catalog.hpp"
#include "ordlim/cdf.hpp"
#include "ordlim/kernel.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rng.hpp"
#include "ordlim/semiorders.hpp"

namespace ordlim {

/// P(n, W): points X_i from the kernel's law (stream rng.child(tag_points),
/// point i), and i < j iff ξ_ij < W(X_i, X_j) with ξ_ij =
/// rng.child(tag_pairs).uniform(i * n + j). Indicator kernels skip ξ.
/// Throws NotTransitive if a custom kernel produces a non-order.
FinitePoset sample_kernel_poset(const KernelModel& w, std::size_t n, const SeededRng& rng);

/// n i.i.d. random intervals from mu, ordered by strict precedence.
FinitePoset sample_interval_poset(const MixedMeasure& mu, std::size_t n, const SeededRng& rng);
FinitePoset sample_interval_poset(const StepKernelMeasure& mu, std::size_t n, const SeededRng& rng);
FinitePoset sample_interval_poset(const AtomicMeasure& mu, std::size_t n, const SeededRng& rng);

/// Empirical distribution of degree(P, i, sign) / n.
StepCDF nu_empirical(const FinitePoset& p, Sign sign);

/// t_ind(Q, ·) for every catalog poset with |Q| <= max_q (standard catalog
/// ids). Exact entries have zero half-width and carry `exact`.
struct Fingerprint {
    std::size_t max_q = 0;
    std::vector<std::size_t> ids;
    std::vector<double> values;
    std::vector<double> half_widths;
    std::vector<Rational> exact;
};

/// Exact, by classifying every subset of at most max_q points. Throws
/// SizeLimit if max_q > 5 and BudgetExceeded beyond 2·10^7 subsets.
Fingerprint fingerprint(const FinitePoset& p, std::size_t max_q);

/// Estimate from `samples` uniformly random ordered max_q-tuples of distinct
/// points (their prefixes serve the smaller sizes); sample s uses
/// rng.child(s). Throws SizeLimit if max_q > 5 or max_q > |P|.
Fingerprint fingerprint_mc(const FinitePoset& p, std::size_t max_q, std::size_t samples, const SeededRng& rng);

/// Transitive closure of the digraph with edges i -> j (i < j), each present
/// independently with probability p (edge (i, j) uses index i * n + j).
FinitePoset random_graph_order(std::size_t n, double p, const SeededRng& rng);

/// min(log(1/p) / (p n), 1).
double c_parameter(std::size_t n, double p);

/// p with c_parameter(n, p) = c, by bisection; 0 < c < 1.
double p_for_c(std::size_t n, double c);

struct ConvergeRow {
    std::size_t n = 0;
    bool semiorder = false;
    std::optional<double> ks_previous;
    std::optional<double> ks_minus_target;
    std::optional<double> ks_plus_target;
};

struct ConvergeReport {
    std::vector<ConvergeRow> rows;
    std::vector<std::string> warnings;
    /// Heuristic: the last distance (to the target if given, else to the
    /// previous poset) is at most `threshold` and below the first one.
    bool converging = false;
    double threshold = 0.05;
};

ConvergeReport converge_diagnostic(const std::vector<FinitePoset>& posets, const std::optional<MonotoneRC>& target_g,
                                   double threshold = 0.05);

/// Mean of each size <= max_q catalog density over `trials` sampled posets
/// from each side, with standard errors; a poset is flagged when the intervals
/// mean ± 4 SE are disjoint.
struct EquivalenceRow {
    std::size_t id = 0;
    double mean_a = 0, se_a = 0, mean_b = 0, se_b = 0;
    bool flagged = false;
};

struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    std::size_t flags = 0;
};

struct EquivalenceOptions {
    std::size_t max_q = 4;
    /// Random tuples per sampled poset when exact subset counting is too
    /// costly.
    std::size_t tuples = 4000;
    std::size_t threads = 0;
};

EquivalenceReport equivalence_test_statistical(const KernelModel& a, const KernelModel& b, std::size_t n,
                                               std::size_t trials, const SeededRng& rng,
                                               const EquivalenceOptions& opt = {});

}  // namespace ordlim
