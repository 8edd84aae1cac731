#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "skewspec/graph.hpp"
#include "skewspec/matrix.hpp"

// Deterministic generators for property-style tests. Raw mt19937 draws with
// modulo keep the streams identical across standard libraries.

namespace testutil {

inline int rand_int(std::mt19937& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
}

inline bool rand_bool(std::mt19937& rng) { return (rng() & 1u) != 0; }

inline skewspec::Graph random_graph(std::mt19937& rng, int n) {
    std::vector<skewspec::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rand_bool(rng)) edges.push_back({u, v});
    return skewspec::Graph(n, std::move(edges));
}

inline skewspec::OrientedGraph random_orientation(std::mt19937& rng, const skewspec::Graph& g) {
    std::vector<skewspec::Arc> arcs;
    arcs.reserve(g.edges.size());
    for (auto [u, v] : g.edges) arcs.push_back(rand_bool(rng) ? skewspec::Arc{v, u} : skewspec::Arc{u, v});
    return skewspec::OrientedGraph(g, std::move(arcs));
}

/// Random oriented bipartite graph on m vertices, already labeled X-first.
inline std::pair<skewspec::OrientedGraph, skewspec::Bipartition> random_bipartite_oriented(
    std::mt19937& rng, int m) {
    const int m1 = m <= 1 ? m : rand_int(rng, 1, m - 1);
    std::vector<skewspec::Arc> arcs;
    for (int u = 0; u < m1; ++u)
        for (int v = m1; v < m; ++v)
            if (rand_bool(rng)) arcs.push_back(rand_bool(rng) ? skewspec::Arc{v, u} : skewspec::Arc{u, v});
    return {skewspec::OrientedGraph::from_arcs(m, arcs), skewspec::x_first_bipartition(m1, m)};
}

inline skewspec::IntMatrix random_int_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    skewspec::IntMatrix m(rows, cols);
    for (auto& v : m.entries) v = rand_int(rng, lo, hi);
    return m;
}

inline skewspec::IntMatrix diag(int n, std::int64_t value) {
    skewspec::IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = value;
    return m;
}

inline skewspec::OrientedGraph disjoint_union(const skewspec::OrientedGraph& a,
                                              const skewspec::OrientedGraph& b) {
    std::vector<skewspec::Arc> arcs = a.arcs;
    for (auto [u, v] : b.arcs) arcs.push_back({u + a.graph.n, v + a.graph.n});
    return skewspec::OrientedGraph::from_arcs(a.graph.n + b.graph.n, arcs);
}

} // namespace testutil
