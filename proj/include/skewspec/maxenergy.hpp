#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewspec/energy.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/graph.hpp"
#include "skewspec/matrix.hpp"
#include "skewspec/products.hpp"

// A Delta-regular oriented graph attains the skew-energy bound n*sqrt(Delta)
// exactly when S^T S = Delta * I. That identity is checked in integer
// arithmetic, so a certificate is exact rather than a numerical claim.

namespace skewspec {

struct MaxEnergyCertificate {
    int order = 0;
    std::int64_t degree = 0;
    bool holds = false;
    // first violating entry of S^T S when the certificate fails
    int witness_i = -1, witness_j = -1;
    std::int64_t witness_value = 0;
};

inline MaxEnergyCertificate certify_max_energy(const IntMatrix& s, std::int64_t delta) {
    detail::require_skew(s);
    for (std::int64_t v : s.entries)
        if (v < -1 || v > 1) throw Error("skew-adjacency entries must be -1, 0 or 1");
    const int n = s.rows;
    MaxEnergyCertificate cert;
    cert.order = n;
    cert.degree = delta;
    cert.holds = true;
    for (int i = 0; i < n && cert.holds; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t v = 0;
            for (int k = 0; k < n; ++k) v += s.at(k, i) * s.at(k, j);
            if (v != (i == j ? delta : 0)) {
                cert.holds = false;
                cert.witness_i = i;
                cert.witness_j = j;
                cert.witness_value = v;
                break;
            }
        }
    if (cert.holds && n <= 64) {
        // S^T S = Delta I forces every singular value to sqrt(Delta); cheap
        // cross-check of the numeric kernel at small orders
        if (std::abs(skew_energy(s) - n * std::sqrt(static_cast<double>(delta))) > 1e-9)
            throw Error("internal: certified matrix disagrees with the numeric energy");
    }
    return cert;
}

namespace detail {

inline OrientedGraph certified_seed(OrientedGraph og, std::int64_t delta, const char* name) {
    if (!certify_max_energy(skew_adjacency(og), delta).holds)
        throw CertificateFailed(std::string("seed ") + name + ": S^T S != delta I");
    return og;
}

} // namespace detail

inline OrientedGraph seed_p2() {
    return detail::certified_seed(OrientedGraph::from_arcs(2, {{0, 1}}), 1, "p2");
}

/// Oddly oriented 4-cycle: three arcs follow the traversal 0-1-2-3-0, one
/// goes against it.
inline OrientedGraph seed_c4() {
    return detail::certified_seed(OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2,
                                  "c4");
}

/// Tournament on K4 with S = [[0,1,1,1],[-1,0,-1,1],[-1,1,0,-1],[-1,-1,1,0]].
inline OrientedGraph seed_k4() {
    return detail::certified_seed(
        OrientedGraph::from_arcs(4, {{0, 1}, {0, 2}, {0, 3}, {2, 1}, {1, 3}, {3, 2}}), 3, "k4");
}

/// K_{4,4} oriented by the lexicographically smallest 4x4 sign matrix with
/// pairwise orthogonal rows; entry +1 at (i, j) means the arc i -> 4+j.
inline OrientedGraph seed_k44() {
    static const int a[4][4] = {{-1, -1, -1, -1}, {-1, -1, 1, 1}, {-1, 1, -1, 1}, {-1, 1, 1, -1}};
    std::vector<Arc> arcs;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            arcs.push_back(a[i][j] > 0 ? Arc{i, 4 + j} : Arc{4 + j, i});
    return detail::certified_seed(OrientedGraph::from_arcs(8, arcs), 4, "k44");
}

/// d-regular orientation of the d-cube, built by repeated cartesian products
/// with an oriented edge.
inline OrientedGraph seed_hypercube(int d) {
    if (d < 1) throw Error("hypercube dimension must be >= 1");
    OrientedGraph q = seed_p2();
    const Bipartition b2 = x_first_bipartition(1, 2);
    for (int i = 1; i < d; ++i) q = orient_cartesian(seed_p2(), b2, q);
    return detail::certified_seed(std::move(q), d, "hypercube");
}

enum class FamilyName { cartesian_c4k4, kron_c4_iter, kron_k4_iter, strong_c4_iter, lex_p2 };

inline const char* to_string(FamilyName f) {
    switch (f) {
        case FamilyName::cartesian_c4k4: return "cartesian_c4k4";
        case FamilyName::kron_c4_iter: return "kron_c4_iter";
        case FamilyName::kron_k4_iter: return "kron_k4_iter";
        case FamilyName::strong_c4_iter: return "strong_c4_iter";
        case FamilyName::lex_p2: return "lex_p2";
    }
    return "?";
}

inline std::optional<FamilyName> family_from_string(const std::string& s) {
    if (s == "cartesian_c4k4") return FamilyName::cartesian_c4k4;
    if (s == "kron_c4_iter") return FamilyName::kron_c4_iter;
    if (s == "kron_k4_iter") return FamilyName::kron_k4_iter;
    if (s == "strong_c4_iter") return FamilyName::strong_c4_iter;
    if (s == "lex_p2") return FamilyName::lex_p2;
    return std::nullopt;
}

struct FamilySpec {
    FamilyName name = FamilyName::cartesian_c4k4;
    int r = 0; // iteration depth
};

struct FamilyResult {
    OrientedGraph oriented;
    int expected_order = 0;
    std::int64_t expected_degree = 0;
    double expected_energy = 0.0;
    MaxEnergyCertificate certificate;
};

/// Iterated max-energy families. The first four grow by one product with the
/// 4-cycle or K4 seed per step (order 4^(r+1)); lex_p2 is the lexicographic
/// construction hypercube(r+1)[C4] with a commuting K4 orientation (order
/// 2^(r+3)), so r = 0 gives P2[C4].
inline FamilyResult build_family(const FamilySpec& spec, int size_limit = 4096) {
    if (spec.r < 0) throw Error("iteration depth must be >= 0");
    if (spec.r > 15) throw SizeLimit("iteration depth " + std::to_string(spec.r) + " is far beyond the size limit");

    std::int64_t pow3 = 1;
    for (int i = 0; i < spec.r; ++i) pow3 *= 3;
    std::int64_t order = 0, degree = 0;
    switch (spec.name) {
        case FamilyName::cartesian_c4k4:
            order = 1LL << (2 * (spec.r + 1));
            degree = 2 * spec.r + 3;
            break;
        case FamilyName::kron_c4_iter:
            order = 1LL << (2 * (spec.r + 1));
            degree = 3LL << spec.r;
            break;
        case FamilyName::kron_k4_iter:
            order = 1LL << (2 * (spec.r + 1));
            degree = 2 * pow3;
            break;
        case FamilyName::strong_c4_iter:
            order = 1LL << (2 * (spec.r + 1));
            degree = 4 * pow3 - 1;
            break;
        case FamilyName::lex_p2:
            order = 1LL << (spec.r + 3);
            degree = 4 * (spec.r + 1) + 2;
            break;
    }
    if (order > size_limit)
        throw SizeLimit("family order " + std::to_string(order) + " exceeds the limit " +
                        std::to_string(size_limit));

    const OrientedGraph c4x = relabel_x_first(seed_c4(), bipartition(seed_c4().graph)).first;
    const Bipartition bc4 = x_first_bipartition(2, 4);

    OrientedGraph cur;
    switch (spec.name) {
        case FamilyName::cartesian_c4k4:
            cur = seed_k4();
            for (int i = 0; i < spec.r; ++i) cur = orient_cartesian(c4x, bc4, cur);
            break;
        case FamilyName::kron_c4_iter:
            cur = seed_k4();
            for (int i = 0; i < spec.r; ++i) cur = orient_kronecker(c4x, bc4, cur);
            break;
        case FamilyName::kron_k4_iter: {
            cur = c4x;
            Bipartition b = bc4;
            for (int i = 0; i < spec.r; ++i) {
                cur = orient_kronecker(cur, b, seed_k4());
                b = inherited_bipartition(b, 4);
            }
            break;
        }
        case FamilyName::strong_c4_iter:
            cur = seed_k4();
            for (int i = 0; i < spec.r; ++i) cur = orient_strong(c4x, bc4, cur);
            break;
        case FamilyName::lex_p2: {
            const OrientedGraph q = seed_hypercube(spec.r + 1);
            const Bipartition bq = bipartition(q.graph);
            const OrientedGraph hx = relabel_x_first(q, bq).first;
            cur = orient_lexicographic(hx, x_first_bipartition(bq.m1(), q.graph.n), seed_c4(),
                                       seed_k4());
            break;
        }
    }

    if (cur.graph.n != order) throw Error("internal: family order mismatch");
    const auto k = regularity(cur.graph);
    if (!k || *k != degree) throw Error("internal: family degree mismatch");
    MaxEnergyCertificate cert = certify_max_energy(skew_adjacency(cur), degree);
    if (!cert.holds)
        throw CertificateFailed("family certificate failed at entry (" +
                                std::to_string(cert.witness_i) + ", " + std::to_string(cert.witness_j) +
                                ")");
    FamilyResult res;
    res.oriented = std::move(cur);
    res.expected_order = static_cast<int>(order);
    res.expected_degree = degree;
    res.expected_energy = static_cast<double>(order) * std::sqrt(static_cast<double>(degree));
    res.certificate = cert;
    return res;
}

/// Left fold of oriented Kronecker products over gs, keeping the inherited
/// bipartition between steps. Every input must be a certified max-energy
/// orientation; the result is certified for the product of the degrees.
inline OrientedGraph iterate_kronecker(const OrientedGraph& h, const Bipartition& bh,
                                       const std::vector<OrientedGraph>& gs) {
    detail::require_x_first(h.graph, bh);
    auto require_max_energy = [](const OrientedGraph& og, const char* role) -> std::int64_t {
        const auto k = regularity(og.graph);
        if (!k) throw CertificateFailed(std::string(role) + " input is not regular");
        if (!certify_max_energy(skew_adjacency(og), *k).holds)
            throw CertificateFailed(std::string(role) + " input is not a max-energy orientation");
        return *k;
    };
    std::int64_t degree = require_max_energy(h, "bipartite");
    OrientedGraph cur = h;
    Bipartition b = bh;
    for (const OrientedGraph& g : gs) {
        degree = detail::checked_mul(degree, require_max_energy(g, "factor"));
        cur = orient_kronecker(cur, b, g);
        b = inherited_bipartition(b, g.graph.n);
    }
    if (!certify_max_energy(skew_adjacency(cur), degree).holds)
        throw CertificateFailed("iterated product lost the max-energy certificate");
    return cur;
}

/// Searches the orientations of the complete graph on n = |V(g)| vertices for
/// one whose skew-adjacency S3 satisfies S3^T S3 = (n-1) I and commutes with
/// S(g). Codes are tried in increasing binary order over the lexicographic
/// edge list; returns the first hit, or nothing (n = 3 has none: a 3x3 skew
/// matrix is singular).
inline std::optional<OrientedGraph> find_commuting_kn(const OrientedGraph& g) {
    const int n = g.graph.n;
    if (n > 5) throw SizeLimit("commuting complete-orientation search is limited to n <= 5");
    const IntMatrix s2 = skew_adjacency(g);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    const int e = static_cast<int>(edges.size());
    for (std::uint64_t code = 0; code < (1ULL << e); ++code) {
        IntMatrix s3(n, n);
        std::vector<Arc> arcs;
        arcs.reserve(e);
        for (int idx = 0; idx < e; ++idx) {
            auto [u, v] = edges[idx];
            if (code >> idx & 1) std::swap(u, v);
            s3.at(u, v) = 1;
            s3.at(v, u) = -1;
            arcs.push_back({u, v});
        }
        if (!certify_max_energy(s3, n - 1).holds) continue;
        if (matmul(s2, s3) != matmul(s3, s2)) continue;
        return OrientedGraph::from_arcs(n, arcs);
    }
    return std::nullopt;
}

} // namespace skewspec
