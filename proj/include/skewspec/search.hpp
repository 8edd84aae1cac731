#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "skewspec/energy.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/graph.hpp"

// An orientation of a graph is identified by a code: bit i flips edge i of
// the lexicographically sorted edge list away from its default low -> high
// direction. Complementing every bit reverses all arcs, which negates S and
// therefore preserves the spectrum.

namespace skewspec {

inline OrientedGraph apply_orientation_code(const Graph& g, std::uint64_t code) {
    if (g.edges.size() >= 64) throw SizeLimit("orientation codes cover at most 63 edges");
    std::vector<Arc> arcs;
    arcs.reserve(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        arcs.push_back(code >> i & 1 ? Arc{v, u} : Arc{u, v});
    }
    return OrientedGraph(g, std::move(arcs));
}

inline std::uint64_t orientation_code(const OrientedGraph& og) {
    if (og.arcs.size() >= 64) throw SizeLimit("orientation codes cover at most 63 edges");
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < og.arcs.size(); ++i)
        if (og.arcs[i].first > og.arcs[i].second) code |= 1ULL << i;
    return code;
}

/// Tries every orientation of a k-regular graph and returns the codes whose
/// skew-adjacency satisfies S^T S = k I exactly, in increasing code order.
/// The check is integer-only: for every vertex pair the signed count over
/// common neighbours has to vanish (the diagonal is the degree already).
inline std::vector<std::uint64_t> enumerate_max_energy(const Graph& g) {
    if (!regularity(g)) throw NotRegular("orientation search needs a regular graph");
    const int e = static_cast<int>(g.edges.size());
    if (e > 24) throw SizeLimit("orientation search is limited to 24 edges");

    auto edge_index = [&](int u, int v) {
        const Edge key{std::min(u, v), std::max(u, v)};
        return static_cast<int>(std::lower_bound(g.edges.begin(), g.edges.end(), key) -
                                g.edges.begin());
    };
    struct Term {
        int ei, ej;       // edges {w,i} and {w,j} for a common neighbour w
        bool gi, gj;      // w > i, w > j
    };
    const auto adj = adjacency_lists(g);
    std::vector<std::vector<Term>> pair_terms;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            std::vector<Term> terms;
            for (int w : adj[i])
                if (w != j && g.has_edge(w, j))
                    terms.push_back({edge_index(w, i), edge_index(w, j), w > i, w > j});
            if (!terms.empty()) pair_terms.push_back(std::move(terms));
        }

    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < (1ULL << e); ++code) {
        bool ok = true;
        for (const auto& terms : pair_terms) {
            int sum = 0;
            for (const Term& t : terms) {
                // arc w -> i contributes +1 at S[w][i]; the sign survives in
                // the product exactly when both factors agree
                const bool si = ((code >> t.ei & 1) != 0) == t.gi;
                const bool sj = ((code >> t.ej & 1) != 0) == t.gj;
                sum += si == sj ? 1 : -1;
            }
            if (sum != 0) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(code);
    }
    return out;
}

/// Skew energy of every orientation, bucketed at 1e-6 resolution and sorted
/// by descending energy.
inline std::vector<std::pair<double, std::int64_t>> energy_histogram(const Graph& g) {
    const int e = static_cast<int>(g.edges.size());
    if (e > 20) throw SizeLimit("energy histogram is limited to 20 edges");
    std::map<std::int64_t, std::int64_t> buckets;
    for (std::uint64_t code = 0; code < (1ULL << e); ++code)
        ++buckets[std::llround(skew_energy(skew_adjacency(apply_orientation_code(g, code))) * 1e6)];
    std::vector<std::pair<double, std::int64_t>> out;
    out.reserve(buckets.size());
    for (auto it = buckets.rbegin(); it != buckets.rend(); ++it)
        out.push_back({static_cast<double>(it->first) * 1e-6, it->second});
    return out;
}

} // namespace skewspec
