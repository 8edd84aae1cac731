#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "skewspec/errors.hpp"
#include "skewspec/matrix.hpp"

namespace skewspec {

using Edge = std::pair<int, int>; // stored normalized, first < second
using Arc = std::pair<int, int>;  // directed first -> second

/// Simple undirected graph on vertices 0..n-1. Edges are normalized, sorted
/// and deduplicated; treat values as immutable once built.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
        if (n < 0) throw Error("negative vertex count");
        for (auto& [u, v] : edges) {
            if (u == v) throw Error("loop edge at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n)
                throw Error("edge {" + std::to_string(u) + ", " + std::to_string(v) + "} out of range");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
    }

    bool operator==(const Graph&) const = default;
};

inline std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj; // ascending per vertex because the edge list is sorted
}

inline std::optional<int> regularity(const Graph& g) {
    std::vector<int> deg(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    if (g.n == 0) return 0;
    for (int d : deg)
        if (d != deg[0]) return std::nullopt;
    return deg[0];
}

/// Oriented graph: each edge of the underlying graph carries exactly one
/// direction. arcs[i] orients graph.edges[i].
struct OrientedGraph {
    Graph graph;
    std::vector<Arc> arcs;

    OrientedGraph() = default;
    OrientedGraph(Graph g, std::vector<Arc> arcs_) : graph(std::move(g)), arcs(std::move(arcs_)) {
        if (arcs.size() != graph.edges.size()) throw Error("arc count differs from edge count");
        std::sort(arcs.begin(), arcs.end(),
                  [](const Arc& a, const Arc& b) { return normalize(a) < normalize(b); });
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (normalize(arcs[i]) != graph.edges[i]) throw Error("arcs are not in bijection with edges");
    }

    static Edge normalize(const Arc& a) {
        return {std::min(a.first, a.second), std::max(a.first, a.second)};
    }

    static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs_) {
        std::vector<Edge> edges;
        edges.reserve(arcs_.size());
        for (const Arc& a : arcs_) edges.push_back(normalize(a));
        std::vector<Edge> sorted = edges;
        std::sort(sorted.begin(), sorted.end());
        const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw Error("two arcs on edge {" + std::to_string(dup->first) + ", " +
                        std::to_string(dup->second) + "}");
        return OrientedGraph(Graph(n, std::move(edges)), arcs_);
    }

    bool has_arc(int u, int v) const {
        const Edge e = normalize({u, v});
        const auto it = std::lower_bound(graph.edges.begin(), graph.edges.end(), e);
        if (it == graph.edges.end() || *it != e) return false;
        return arcs[it - graph.edges.begin()] == Arc{u, v};
    }

    bool operator==(const OrientedGraph&) const = default;
};

inline IntMatrix skew_adjacency(const OrientedGraph& g) {
    IntMatrix s(g.graph.n, g.graph.n);
    for (auto [u, v] : g.arcs) {
        s.at(u, v) = 1;
        s.at(v, u) = -1;
    }
    return s;
}

struct Bipartition {
    std::vector<int> x, y;

    int m1() const { return static_cast<int>(x.size()); }
    int m2() const { return static_cast<int>(y.size()); }
};

/// 2-coloring by breadth-first layering, one component at a time. Within each
/// component the side containing the smallest vertex index goes to X, so
/// isolated vertices land in X. Throws NotBipartite with an offending edge.
inline Bipartition bipartition(const Graph& g) {
    const auto adj = adjacency_lists(g);
    std::vector<int> color(g.n, -1); // 0 = X side, 1 = Y side
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    throw NotBipartite(std::min(u, v), std::max(u, v));
                }
            }
        }
    }
    Bipartition b;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? b.x : b.y).push_back(v);
    return b;
}

inline void validate_bipartition(const Graph& g, const Bipartition& b) {
    if (static_cast<int>(b.x.size() + b.y.size()) != g.n)
        throw Error("bipartition does not cover every vertex exactly once");
    std::vector<int> side(g.n, -1);
    for (int v : b.x) {
        if (v < 0 || v >= g.n || side[v] != -1) throw Error("invalid bipartition");
        side[v] = 0;
    }
    for (int v : b.y) {
        if (v < 0 || v >= g.n || side[v] != -1) throw Error("invalid bipartition");
        side[v] = 1;
    }
    for (auto [u, v] : g.edges)
        if (side[u] == side[v]) throw NotBipartite(u, v);
}

inline bool is_x_first(const Bipartition& b) {
    for (int i = 0; i < b.m1(); ++i)
        if (b.x[i] != i) return false;
    for (int j = 0; j < b.m2(); ++j)
        if (b.y[j] != b.m1() + j) return false;
    return true;
}

inline Bipartition x_first_bipartition(int m1, int n) {
    Bipartition b;
    for (int i = 0; i < m1; ++i) b.x.push_back(i);
    for (int i = m1; i < n; ++i) b.y.push_back(i);
    return b;
}

/// Relabels so that X vertices come first in their given order, then Y.
/// Returns the relabeled graph and the permutation (old index -> new index).
inline std::pair<OrientedGraph, std::vector<int>> relabel_x_first(const OrientedGraph& h,
                                                                  const Bipartition& b) {
    validate_bipartition(h.graph, b);
    std::vector<int> perm(h.graph.n, -1);
    int next = 0;
    for (int v : b.x) perm[v] = next++;
    for (int v : b.y) perm[v] = next++;
    std::vector<Arc> arcs;
    arcs.reserve(h.arcs.size());
    for (auto [u, v] : h.arcs) arcs.push_back({perm[u], perm[v]});
    return {OrientedGraph::from_arcs(h.graph.n, arcs), perm};
}

} // namespace skewspec
