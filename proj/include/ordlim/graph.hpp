#pragma once

#include <cstddef>
#include <vector>

#include "ordlim/bitmatrix.hpp"
#include "ordlim/poset.hpp"
#include "ordlim/rational.hpp"

namespace ordlim {

/// Undirected loopless graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n) : adj_(n) {}

    /// Throws InputError on a loop or an out-of-range vertex.
    static SimpleGraph from_edges(std::size_t n, std::span<const Pair> edges);
    static SimpleGraph complete(std::size_t n);
    static SimpleGraph cycle(std::size_t n);

    std::size_t size() const { return adj_.size(); }
    bool adjacent(std::size_t i, std::size_t j) const { return adj_.test(i, j); }
    void add_edge(std::size_t i, std::size_t j);

    /// Edges (i, j) with i < j, sorted.
    std::vector<Pair> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    BitMatrix adj_;
};

/// Ψ(P): i ~ j iff comparable.
SimpleGraph comparability_graph(const FinitePoset& p);

SimpleGraph complement_graph(const SimpleGraph& g);

/// Induced embeddings F -> G over (|G|)_|F|; 0 when |F| > |G|. Throws
/// SizeLimit when |F| > 5.
Rational graph_t_ind(const SimpleGraph& f, const SimpleGraph& g);

/// All orientations of F's edges that are strict orders, as labelled posets
/// on F's vertex set.
std::vector<FinitePoset> poset_orientations(const SimpleGraph& f);

}  // namespace ordlim
