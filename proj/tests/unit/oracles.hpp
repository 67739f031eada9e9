#pragma once

// Slow reference implementations used as independent checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ordlim/densities.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rational.hpp"

namespace oracle {

using ordlim::FinitePoset;
using ordlim::Rational;

/// Visits every map {0..k-1} -> {0..n-1} as a vector.
template <typename F>
void for_each_map(std::size_t k, std::size_t n, F&& fn)
{
    std::vector<std::size_t> f(k, 0);
    while (true) {
        fn(f);
        std::size_t i = 0;
        while (i < k && ++f[i] == n) f[i++] = 0;
        if (i == k) return;
    }
}

inline std::uint64_t count_maps(const FinitePoset& q, const FinitePoset& p, ordlim::DensityKind kind)
{
    const std::size_t k = q.size(), n = p.size();
    if (n == 0) return 0;
    std::uint64_t count = 0;
    for_each_map(k, n, [&](const std::vector<std::size_t>& f) {
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) {
                if (a != b && kind != ordlim::DensityKind::hom && f[a] == f[b]) return;
                if (q.less(a, b) && !p.less(f[a], f[b])) return;
                if (kind == ordlim::DensityKind::ind && !q.less(a, b) && a != b && p.less(f[a], f[b])) return;
            }
        ++count;
    });
    return count;
}

inline Rational density(const FinitePoset& q, const FinitePoset& p, ordlim::DensityKind kind)
{
    const std::size_t k = q.size(), n = p.size();
    if (kind != ordlim::DensityKind::hom && k > n) return Rational(0);
    Rational denom = 1;
    for (std::size_t i = 0; i < k; ++i) denom *= kind == ordlim::DensityKind::hom ? n : n - i;
    return Rational(oracle::count_maps(q, p, kind)) / denom;
}

/// Random order: a random DAG on a random labelling, closed transitively.
inline FinitePoset random_poset(std::size_t n, double edge_p, std::mt19937_64& gen)
{
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), gen);
    std::bernoulli_distribution coin(edge_p);
    std::vector<ordlim::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(gen)) pairs.emplace_back(perm[i], perm[j]);
    return FinitePoset::from_relations(n, pairs);
}

/// Warshall closure check on a dense matrix.
inline bool is_strict_order(const std::vector<std::vector<bool>>& r)
{
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (r[i][i]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (r[i][j] && r[j][i]) return false;
            for (std::size_t k = 0; k < n; ++k)
                if (r[i][j] && r[j][k] && !r[i][k]) return false;
        }
    }
    return true;
}

}  // namespace oracle
