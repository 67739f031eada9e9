#include "ordlim/graph.hpp"

#include <string>

#include "ordlim/errors.hpp"

namespace ordlim {

void SimpleGraph::add_edge(std::size_t i, std::size_t j)
{
    if (i >= size() || j >= size()) throw InputError("edge endpoint out of range");
    if (i == j) throw InputError("loop at vertex " + std::to_string(i));
    adj_.set(i, j);
    adj_.set(j, i);
}

SimpleGraph SimpleGraph::from_edges(std::size_t n, std::span<const Pair> edges)
{
    SimpleGraph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
}

SimpleGraph SimpleGraph::complete(std::size_t n)
{
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph SimpleGraph::cycle(std::size_t n)
{
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

std::vector<Pair> SimpleGraph::edges() const
{
    std::vector<Pair> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

SimpleGraph comparability_graph(const FinitePoset& p)
{
    SimpleGraph g(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for_each_bit(p.successors(i), [&](std::size_t j) { g.add_edge(i, j); });
    return g;
}

SimpleGraph complement_graph(const SimpleGraph& g)
{
    SimpleGraph h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) h.add_edge(i, j);
    return h;
}

Rational graph_t_ind(const SimpleGraph& f, const SimpleGraph& g)
{
    const std::size_t k = f.size();
    const std::size_t n = g.size();
    if (k > 5) throw SizeLimit("graph_t_ind: pattern has " + std::to_string(k) + " vertices, limit is 5");
    if (k == 0) return 1;
    if (k > n) return 0;

    std::vector<std::size_t> image(k);
    std::vector<bool> used(n, false);
    BigInt count = 0;
    auto extend = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            count += 1;
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (std::size_t e = 0; e < depth && ok; ++e) ok = f.adjacent(depth, e) == g.adjacent(v, image[e]);
            if (!ok) continue;
            used[v] = true;
            image[depth] = v;
            self(self, depth + 1);
            used[v] = false;
        }
    };
    extend(extend, 0);

    BigInt den = 1;
    for (std::size_t i = 0; i < k; ++i) den *= static_cast<unsigned long>(n - i);
    Rational r(count, den);
    r.canonicalize();
    return r;
}

std::vector<FinitePoset> poset_orientations(const SimpleGraph& f)
{
    const auto edges = f.edges();
    if (edges.size() > 20) throw SizeLimit("poset_orientations: too many edges");
    std::vector<FinitePoset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
        BitMatrix rel(f.size());
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto [i, j] = edges[e];
            if ((mask >> e) & 1U)
                rel.set(j, i);
            else
                rel.set(i, j);
        }
        if (check_strict_order(rel) == OrderDefect::none) out.push_back(make_trusted_poset(std::move(rel)));
    }
    return out;
}

}  // namespace ordlim
