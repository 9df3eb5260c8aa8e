#pragma once

/*
 * Directed multigraph view of an extended exchange matrix and DOT export.
 *
 * Arrows come from the row-rescaled matrix: a positive entry (i, j) is an
 * arrow i -> j with that multiplicity. Mutable vertices with d > 1 are
 * rendered as hexagons, other mutable vertices as ellipses, stable vertices
 * as boxes.
 */

#include <gencluster/exchange_matrix.hpp>

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace gencluster {

struct Quiver {
    int n_mutable = 0;
    int n_stable = 0;
    std::vector<std::string> names;         // size n_mutable + n_stable
    std::vector<Int> d;                     // size n_mutable
    std::map<std::pair<int, int>, Int> arrows;  // (from, to), 1-based, mult > 0

    int n_total() const { return n_mutable + n_stable; }

    Int multiplicity(int from, int to) const {
        auto it = arrows.find({from, to});
        return it == arrows.end() ? Int(0) : it->second;
    }

    // In- plus out-degree counted with multiplicity.
    Int degree(int v) const {
        Int deg = 0;
        for (const auto& [e, m] : arrows)
            if (e.first == v || e.second == v) deg += m;
        return deg;
    }

    Int out_degree(int v) const {
        Int deg = 0;
        for (const auto& [e, m] : arrows)
            if (e.first == v) deg += m;
        return deg;
    }

    Int in_degree(int v) const {
        Int deg = 0;
        for (const auto& [e, m] : arrows)
            if (e.second == v) deg += m;
        return deg;
    }
};

inline std::vector<std::string> default_names(int n_total) {
    std::vector<std::string> names;
    names.reserve(n_total);
    for (int i = 1; i <= n_total; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

inline Quiver quiver_from_matrix(const ExtendedExchangeMatrix& m, std::vector<std::string> names = {}) {
    Quiver q;
    q.n_mutable = m.n_mutable();
    q.n_stable = m.n_stable();
    q.names = names.empty() ? default_names(m.n_total()) : std::move(names);
    if (static_cast<int>(q.names.size()) != m.n_total()) throw dimension_error("quiver_from_matrix: name count");
    for (int i = 1; i <= m.n_mutable(); ++i) q.d.push_back(m.d(i));
    Matrix<Int> r = m.rescaled();
    for (int i = 1; i <= m.n_mutable(); ++i)
        for (int j = 1; j <= m.n_total(); ++j) {
            if (j <= m.n_mutable() && j <= i) continue;  // mutable pairs once, via upper triangle
            Int v = r.e(i, j);
            if (v > 0)
                q.arrows[{i, j}] = v;
            else if (v < 0)
                q.arrows[{j, i}] = -v;
        }
    return q;
}

inline ExtendedExchangeMatrix matrix_from_quiver(const Quiver& q) {
    ExtendedExchangeMatrix m(q.n_mutable, q.n_stable);
    for (int i = 1; i <= q.n_mutable; ++i) m.d(i) = q.d.at(i - 1);
    for (const auto& [e, mult] : q.arrows) {
        auto [from, to] = e;
        if (from <= q.n_mutable) {
            Int scaled = (to <= q.n_mutable) ? Int(mult * m.d(from)) : mult;
            m.e(from, to) += scaled;
        }
        if (to <= q.n_mutable) {
            Int scaled = (from <= q.n_mutable) ? Int(mult * m.d(to)) : mult;
            m.e(to, from) -= scaled;
        }
    }
    return m;
}

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

inline std::string to_dot(const Quiver& q, const std::string& graph_name = "exchange_quiver") {
    std::ostringstream os;
    os << "digraph " << graph_name << " {\n";
    os << "  rankdir=LR;\n";
    os << "  node [fontsize=11];\n";
    for (int v = 1; v <= q.n_total(); ++v) {
        const std::string& name = q.names.at(v - 1);
        os << "  n" << v << " [label=\"" << dot_escape(name);
        if (v <= q.n_mutable && q.d.at(v - 1) > 1) {
            os << " (d=" << q.d.at(v - 1).get_str() << ")\" shape=hexagon";
        } else if (v <= q.n_mutable) {
            os << "\" shape=ellipse";
        } else {
            os << "\" shape=box";
        }
        os << "];\n";
    }
    for (const auto& [e, mult] : q.arrows) {
        os << "  n" << e.first << " -> n" << e.second;
        if (mult != 1) os << " [label=\"" << mult.get_str() << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace gencluster
