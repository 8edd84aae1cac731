#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewspec/errors.hpp"
#include "skewspec/graph.hpp"
#include "skewspec/matrix.hpp"

// Products of a graph H on m vertices with a graph G on n vertices live on
// V(H) x V(G), flattened as (u, v) -> u*n + v. All oriented constructions
// below require H bipartite and relabeled X-first; each one builds the arc
// set from the local rules and then checks it against the closed matrix
// formula, so the two derivations guard each other.

namespace skewspec {

enum class ProductKind { cartesian, kronecker, strong, lexicographic };

inline const char* to_string(ProductKind k) {
    switch (k) {
        case ProductKind::cartesian: return "cartesian";
        case ProductKind::kronecker: return "kronecker";
        case ProductKind::strong: return "strong";
        case ProductKind::lexicographic: return "lex";
    }
    return "?";
}

inline std::optional<ProductKind> product_kind_from_string(const std::string& s) {
    if (s == "cartesian") return ProductKind::cartesian;
    if (s == "kronecker") return ProductKind::kronecker;
    if (s == "strong") return ProductKind::strong;
    if (s == "lex") return ProductKind::lexicographic;
    return std::nullopt;
}

namespace detail {

inline int flat(int u, int v, int n) { return u * n + v; }

inline void require_x_first(const Graph& h, const Bipartition& b) {
    validate_bipartition(h, b);
    if (!is_x_first(b)) throw Error("bipartition must list the X side first (use relabel_x_first)");
}

inline void check_formula(const IntMatrix& built, const IntMatrix& formula, const char* what) {
    if (built != formula)
        throw Error(std::string("internal: ") + what + " arc rules disagree with the matrix formula");
}

} // namespace detail

inline Graph product_graph(const Graph& h, const Graph& g, ProductKind kind) {
    const int m = h.n, n = g.n;
    const long long order = static_cast<long long>(m) * n;
    if (order > (1 << 30)) throw SizeLimit("product order does not fit the memory budget");

    auto cartesian_edges = [&]() {
        std::vector<Edge> es;
        for (int u = 0; u < m; ++u)
            for (auto [c, d] : g.edges) es.push_back({detail::flat(u, c, n), detail::flat(u, d, n)});
        for (auto [a, b] : h.edges)
            for (int v = 0; v < n; ++v) es.push_back({detail::flat(a, v, n), detail::flat(b, v, n)});
        return es;
    };
    auto kronecker_edges = [&]() {
        std::vector<Edge> es;
        for (auto [a, b] : h.edges)
            for (auto [c, d] : g.edges) {
                es.push_back({detail::flat(a, c, n), detail::flat(b, d, n)});
                es.push_back({detail::flat(a, d, n), detail::flat(b, c, n)});
            }
        return es;
    };

    switch (kind) {
        case ProductKind::cartesian:
            return Graph(m * n, cartesian_edges());
        case ProductKind::kronecker:
            return Graph(m * n, kronecker_edges());
        case ProductKind::strong: {
            const Graph cart(m * n, cartesian_edges());
            const Graph kron(m * n, kronecker_edges());
            std::vector<Edge> es = cart.edges;
            es.insert(es.end(), kron.edges.begin(), kron.edges.end());
            const Graph out(m * n, es);
            if (out.edges.size() != cart.edges.size() + kron.edges.size())
                throw Error("internal: cartesian and kronecker edge sets are not disjoint");
            return out;
        }
        case ProductKind::lexicographic: {
            std::vector<Edge> es;
            for (int u = 0; u < m; ++u)
                for (auto [c, d] : g.edges) es.push_back({detail::flat(u, c, n), detail::flat(u, d, n)});
            for (auto [a, b] : h.edges)
                for (int v1 = 0; v1 < n; ++v1)
                    for (int v2 = 0; v2 < n; ++v2)
                        es.push_back({detail::flat(a, v1, n), detail::flat(b, v2, n)});
            return Graph(m * n, es);
        }
    }
    throw Error("unknown product kind");
}

/// Orients H (x) G for bipartite H relabeled X-first. For a product edge with
/// first coordinate u1 in X, the arc runs (u1,v1) -> (u2,v2) exactly when both
/// coordinate arcs agree with <u1,u2>, <v1,v2> or both are reversed. The
/// skew-adjacency matrix then factors as S'(H) (x) S(G).
inline OrientedGraph orient_kronecker(const OrientedGraph& h, const Bipartition& bh,
                                      const OrientedGraph& g) {
    detail::require_x_first(h.graph, bh);
    const int n = g.graph.n;
    const int m1 = bh.m1();
    std::vector<Arc> arcs;
    arcs.reserve(2 * h.arcs.size() * g.arcs.size());
    for (auto [hu, hv] : h.arcs) {
        const int a = hu < m1 ? hu : hv; // X endpoint
        const int b = hu < m1 ? hv : hu; // Y endpoint
        const bool forward = a == hu;    // H arc leaves the X side
        for (auto [c, d] : g.arcs) {
            if (forward) {
                arcs.push_back({detail::flat(a, c, n), detail::flat(b, d, n)});
                arcs.push_back({detail::flat(b, c, n), detail::flat(a, d, n)});
            } else {
                arcs.push_back({detail::flat(b, d, n), detail::flat(a, c, n)});
                arcs.push_back({detail::flat(a, d, n), detail::flat(b, c, n)});
            }
        }
    }
    OrientedGraph out = OrientedGraph::from_arcs(h.graph.n * n, arcs);
    detail::check_formula(skew_adjacency(out),
                          kronecker(symmetrize_bipartite(skew_adjacency(h), m1), skew_adjacency(g)),
                          "kronecker");
    return out;
}

/// Orients H [] G for bipartite H relabeled X-first. Fibers over X copy G's
/// arcs, fibers over Y reverse them, and G-fibers copy H's arcs:
/// S = diag(I_m1, -I_m2) (x) S(G) + S(H) (x) I_n.
inline OrientedGraph orient_cartesian(const OrientedGraph& h, const Bipartition& bh,
                                      const OrientedGraph& g) {
    detail::require_x_first(h.graph, bh);
    const int m = h.graph.n, n = g.graph.n;
    const int m1 = bh.m1();
    std::vector<Arc> arcs;
    arcs.reserve(static_cast<std::size_t>(m) * g.arcs.size() + h.arcs.size() * n);
    for (int u = 0; u < m; ++u)
        for (auto [c, d] : g.arcs) {
            if (u < m1)
                arcs.push_back({detail::flat(u, c, n), detail::flat(u, d, n)});
            else
                arcs.push_back({detail::flat(u, d, n), detail::flat(u, c, n)});
        }
    for (auto [a, b] : h.arcs)
        for (int v = 0; v < n; ++v) arcs.push_back({detail::flat(a, v, n), detail::flat(b, v, n)});
    OrientedGraph out = OrientedGraph::from_arcs(m * n, arcs);
    detail::check_formula(skew_adjacency(out),
                          add(kronecker(signed_identity(m1, m - m1), skew_adjacency(g)),
                              kronecker(skew_adjacency(h), IntMatrix::identity(n))),
                          "cartesian");
    return out;
}

/// Orients H * G as the disjoint arc union of the cartesian and kronecker
/// orientations, so S = S(cartesian) + S(kronecker).
inline OrientedGraph orient_strong(const OrientedGraph& h, const Bipartition& bh,
                                   const OrientedGraph& g) {
    const OrientedGraph cart = orient_cartesian(h, bh, g);
    const OrientedGraph kron = orient_kronecker(h, bh, g);
    std::vector<Arc> arcs = cart.arcs;
    arcs.insert(arcs.end(), kron.arcs.begin(), kron.arcs.end());
    OrientedGraph out = OrientedGraph::from_arcs(h.graph.n * g.graph.n, arcs);
    detail::check_formula(skew_adjacency(out), add(skew_adjacency(cart), skew_adjacency(kron)),
                          "strong");
    return out;
}

/// Orients H[G] as H [] G plus H (x) K_n, where kn is an oriented complete
/// graph on |V(G)| vertices: S = S(cartesian) + S'(H) (x) S(kn).
inline OrientedGraph orient_lexicographic(const OrientedGraph& h, const Bipartition& bh,
                                          const OrientedGraph& g, const OrientedGraph& kn) {
    detail::require_x_first(h.graph, bh);
    const int n = g.graph.n;
    if (kn.graph.n != n || static_cast<int>(kn.graph.edges.size()) != n * (n - 1) / 2)
        throw WrongCompleteOrder("expected the complete graph on " + std::to_string(n) + " vertices");
    const OrientedGraph cart = orient_cartesian(h, bh, g);
    const OrientedGraph kron = orient_kronecker(h, bh, kn);
    std::vector<Arc> arcs = cart.arcs;
    arcs.insert(arcs.end(), kron.arcs.begin(), kron.arcs.end());
    OrientedGraph out = OrientedGraph::from_arcs(h.graph.n * n, arcs);
    detail::check_formula(
        skew_adjacency(out),
        add(skew_adjacency(cart),
            kronecker(symmetrize_bipartite(skew_adjacency(h), bh.m1()), skew_adjacency(kn))),
        "lexicographic");
    return out;
}

/// Bipartition of a product with bipartite X-first H: X' = X x V(G), which is
/// again an X-first prefix under the flat order.
inline Bipartition inherited_bipartition(const Bipartition& bh, int n_g) {
    if (!is_x_first(bh)) throw Error("inherited bipartition needs an X-first input");
    return x_first_bipartition(bh.m1() * n_g, (bh.m1() + bh.m2()) * n_g);
}

} // namespace skewspec
