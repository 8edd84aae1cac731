#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "skewspec/eigen.hpp"
#include "skewspec/energy.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/graph.hpp"
#include "skewspec/matrix.hpp"
#include "skewspec/maxenergy.hpp"

// Graph files come in two equivalent shapes. Text: a header line "n m"
// followed by m lines "u v", each an arc u -> v (or an undirected edge when
// the caller asks for that). JSON: {"n": ..., "arcs": [[u, v], ...]}. The
// reader sniffs the format from the first non-space byte.

namespace skewspec {
namespace io {

inline double round9(double v) { return std::round(v * 1e9) / 1e9; }

namespace detail {

inline std::vector<Arc> parse_arc_lines(std::istream& in, int& n_out) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto two_ints = [&](int& a, int& b) {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> a >> b)) throw ParseError(lineno, "expected two integers");
        if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
    };

    if (!next_content_line()) throw ParseError(1, "missing header line 'n m'");
    int n = 0, m = 0;
    two_ints(n, m);
    if (n < 0 || m < 0) throw ParseError(lineno, "counts must be nonnegative");

    std::vector<Arc> arcs;
    arcs.reserve(m);
    std::vector<std::vector<bool>> seen; // lazily sized below
    seen.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < m; ++i) {
        if (!next_content_line()) throw ParseError(lineno + 1, "expected " + std::to_string(m) +
                                                                   " arcs, found " + std::to_string(i));
        int u = 0, v = 0;
        two_ints(u, v);
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "loop at vertex " + std::to_string(u));
        if (seen[u][v] || seen[v][u])
            throw ParseError(lineno, "duplicate edge {" + std::to_string(std::min(u, v)) + ", " +
                                         std::to_string(std::max(u, v)) + "}");
        seen[u][v] = seen[v][u] = true;
        arcs.push_back({u, v});
    }
    if (next_content_line()) throw ParseError(lineno, "unexpected trailing line");
    n_out = n;
    return arcs;
}

} // namespace detail

inline OrientedGraph parse_oriented_text(std::istream& in) {
    int n = 0;
    const std::vector<Arc> arcs = detail::parse_arc_lines(in, n);
    return OrientedGraph::from_arcs(n, arcs);
}

/// Same line format, but each "u v" is an undirected edge.
inline Graph parse_graph_text(std::istream& in) {
    int n = 0;
    const std::vector<Arc> arcs = detail::parse_arc_lines(in, n);
    std::vector<Edge> edges;
    edges.reserve(arcs.size());
    for (auto [u, v] : arcs) edges.push_back({std::min(u, v), std::max(u, v)});
    return Graph(n, std::move(edges));
}

inline OrientedGraph oriented_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs") || !j["n"].is_number_integer() ||
        !j["arcs"].is_array())
        throw ParseError(1, "expected {\"n\": ..., \"arcs\": [[u, v], ...]}");
    std::vector<Arc> arcs;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw ParseError(1, "each arc must be a pair of integers");
        arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    try {
        return OrientedGraph::from_arcs(j["n"].get<int>(), arcs);
    } catch (const Error& e) {
        throw ParseError(1, e.what());
    }
}

inline nlohmann::json oriented_to_json(const OrientedGraph& g) {
    nlohmann::json arcs = nlohmann::json::array();
    for (auto [u, v] : g.arcs) arcs.push_back({u, v});
    return {{"n", g.graph.n}, {"arcs", std::move(arcs)}};
}

inline void write_oriented_text(const OrientedGraph& g, std::ostream& os) {
    os << g.graph.n << ' ' << g.arcs.size() << '\n';
    for (auto [u, v] : g.arcs) os << u << ' ' << v << '\n';
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline bool looks_like_json(const std::string& content) {
    const auto pos = content.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && content[pos] == '{';
}

inline OrientedGraph parse_oriented(const std::string& content) {
    if (looks_like_json(content)) {
        try {
            return oriented_from_json(nlohmann::json::parse(content));
        } catch (const nlohmann::json::parse_error& e) {
            const std::size_t upto = std::min(content.size(), e.byte);
            const int line = 1 + static_cast<int>(std::count(content.begin(), content.begin() + upto, '\n'));
            throw ParseError(line, std::string("invalid JSON: ") + e.what());
        }
    }
    std::istringstream in(content);
    return parse_oriented_text(in);
}

inline OrientedGraph read_oriented_file(const std::string& path) {
    return parse_oriented(read_file(path));
}

inline Graph read_graph_file(const std::string& path, bool undirected) {
    const std::string content = read_file(path);
    if (!undirected || looks_like_json(content)) return parse_oriented(content).graph;
    std::istringstream in(content);
    return parse_graph_text(in);
}

/// One row per line, comma-separated integer entries.
inline std::string matrix_csv(const IntMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) os << ',';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json spectrum_json(const SkewSpectrum& sp) {
    nlohmann::json values = nlohmann::json::array();
    for (double v : sp.values) values.push_back(round9(v));
    return {{"values", std::move(values)}, {"multiplicity_paired", true}};
}

inline nlohmann::json report_json(const ComparisonReport& rep) {
    nlohmann::json predicted = nlohmann::json::array(), computed = nlohmann::json::array();
    for (double v : rep.predicted) predicted.push_back(round9(v));
    for (double v : rep.computed) computed.push_back(round9(v));
    return {{"pass", rep.pass},
            {"max_abs_dev", round9(rep.max_abs_dev)},
            {"order", rep.order},
            {"predicted", std::move(predicted)},
            {"computed", std::move(computed)}};
}

inline nlohmann::json certificate_json(const MaxEnergyCertificate& c) {
    nlohmann::json j{{"holds", c.holds}, {"order", c.order}, {"degree", c.degree}};
    if (c.holds) {
        j["energy"] = round9(c.order * std::sqrt(static_cast<double>(c.degree)));
        j["witness"] = "S^T S = delta I verified exactly";
    } else {
        j["energy"] = nullptr;
        j["witness"] = {{"i", c.witness_i}, {"j", c.witness_j}, {"value", c.witness_value}};
    }
    return j;
}

} // namespace io
} // namespace skewspec
