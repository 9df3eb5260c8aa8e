#pragma once

/*
 * Construction of the initial generalized seed on pairs (X, Y), and of the
 * companion seed in the single-matrix variable U.
 *
 * Vertex set (canonical specs): mutable are g(i,j) with 2 <= j <= i <= n,
 * f(k,l) with k,l >= 1, k+l <= n-1, h(i,j) with 2 <= i <= j <= n, and
 * phi(k,l) with k,l >= 1, k+l <= n; stable are g(i,1), h(1,j), and c(r).
 * The only special vertex is phi(1,1), with multiplicity n and coefficient
 * string (1, c_1, ..., c_{n-1}, 1).
 *
 * Arrows are emitted one class at a time from each vertex's outgoing list;
 * boundary indices are folded by canonical(). The arrow g11 -> g21 connects
 * two stable vertices and therefore leaves no trace in the exchange matrix.
 */

#include <gencluster/functions.hpp>
#include <gencluster/seed.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gencluster {

struct SeedLayout {
    int n = 0;
    int n_mutable = 0;
    int n_stable = 0;
    std::vector<FunctionSpec> specs;  // mutable vertices first, then stable
    std::vector<std::string> names;
    std::map<FunctionSpec, int> index;  // 1-based vertex id

    int n_total() const { return n_mutable + n_stable; }

    int id(const FunctionSpec& raw) const {
        auto it = index.find(canonical(n, raw));
        if (it == index.end()) throw std::invalid_argument("SeedLayout: no vertex " + spec_name(raw));
        return it->second;
    }

    bool has(const FunctionSpec& raw) const { return index.count(canonical(n, raw)) != 0; }
};

inline SeedLayout build_layout(int n) {
    SeedLayout lay;
    lay.n = n;
    auto push = [&](const FunctionSpec& s) {
        lay.specs.push_back(s);
        lay.names.push_back(spec_name(s));
        lay.index[s] = static_cast<int>(lay.specs.size());
    };
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= i; ++j) push(spec_g(i, j));
    for (int k = 1; k <= n - 2; ++k)
        for (int l = 1; l <= n - 1 - k; ++l) push(spec_f(k, l));
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) push(spec_h(i, j));
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; l <= n - k; ++l) push(spec_phi(k, l));
    lay.n_mutable = static_cast<int>(lay.specs.size());
    for (int i = 1; i <= n; ++i) push(spec_g(i, 1));
    for (int j = 1; j <= n; ++j) push(spec_h(1, j));
    for (int r = 1; r <= n - 1; ++r) push(spec_c(r));
    lay.n_stable = static_cast<int>(lay.specs.size()) - lay.n_mutable;
    return lay;
}

namespace detail {

struct ArrowAccum {
    const SeedLayout& lay;
    std::map<std::pair<int, int>, Int> arrows;

    void add(const FunctionSpec& from, const FunctionSpec& to, int mult = 1) {
        int a = lay.id(from), b = lay.id(to);
        arrows[{a, b}] += mult;
    }
};

// Outgoing arrows of every vertex class for n > 2.
inline void emit_catalogue(int n, ArrowAccum& acc) {
    // phi classes
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; l <= n - k; ++l) {
            if (k == 1 && l == 1) {
                acc.add(spec_phi(1, 1), spec_phi(2, 1));
                acc.add(spec_phi(1, 1), spec_h(1, 1));
            } else if (k == n - 1 && l == 1) {
                acc.add(spec_phi(k, 1), spec_phi(1, n - 1));
                acc.add(spec_phi(k, 1), spec_f(n - 2, 1));
                acc.add(spec_phi(k, 1), spec_g(1, 1));
            } else if (k == 1 && l == n - 1) {
                acc.add(spec_phi(1, l), spec_phi(1, n - 2));
                acc.add(spec_phi(1, l), spec_h(2, 2));
            } else if (l == 1) {  // 2 <= k <= n-2
                acc.add(spec_phi(k, 1), spec_phi(k - 1, 2));
                acc.add(spec_phi(k, 1), spec_phi(1, k));
            } else if (k == 1) {  // 2 <= l <= n-2
                acc.add(spec_phi(1, l), spec_phi(2, l));
                acc.add(spec_phi(1, l), spec_phi(1, l - 1));
                acc.add(spec_phi(1, l), spec_phi(l + 1, 1));
            } else if (k + l == n) {
                acc.add(spec_phi(k, l), spec_phi(k, l - 1));
                acc.add(spec_phi(k, l), spec_f(k - 1, l));
            } else {
                acc.add(spec_phi(k, l), spec_phi(k + 1, l));
                acc.add(spec_phi(k, l), spec_phi(k, l - 1));
                acc.add(spec_phi(k, l), spec_phi(k - 1, l + 1));
            }
        }

    // f classes (k + l <= n-1)
    for (int k = 1; k <= n - 2; ++k)
        for (int l = 1; l <= n - 1 - k; ++l) {
            acc.add(spec_f(k, l), spec_f(k + 1, l - 1));
            acc.add(spec_f(k, l), spec_f(k, l + 1));
            acc.add(spec_f(k, l), spec_f(k - 1, l));
        }

    // g classes
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= i; ++j) {
            if (i == n) {
                acc.add(spec_g(n, j), spec_g(n - 1, j));
                acc.add(spec_g(n, j), spec_g(n, j - 1));
            } else {
                acc.add(spec_g(i, j), spec_g(i + 1, j + 1));
                acc.add(spec_g(i, j), spec_g(i, j - 1));
                acc.add(spec_g(i, j), spec_g(i - 1, j));
            }
        }
    for (int i = 2; i <= n - 1; ++i) acc.add(spec_g(i, 1), spec_g(i + 1, 2));
    acc.add(spec_g(1, 1), spec_g(2, 1));
    acc.add(spec_g(1, 1), spec_phi(1, 1));
    // In-arrow g_{i-1,j-1} -> g_ij of the interior class at i = j = 2; it is
    // invisible to the compatibility product (g11 brackets to zero with
    // everything) but required for the diagonal action to fix all
    // y-variables.
    acc.add(spec_g(1, 1), spec_g(2, 2));

    // h classes
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (i == n) {  // h_nn
                acc.add(spec_h(n, n), spec_g(n, n));
                acc.add(spec_h(n, n), spec_h(n - 1, n));
            } else if (i == j) {
                acc.add(spec_h(i, i), spec_f(1, n - i));
                acc.add(spec_h(i, i), spec_h(i - 1, i));
            } else if (j == n) {
                acc.add(spec_h(i, n), spec_h(i, n - 1));
                acc.add(spec_h(i, n), spec_h(i - 1, n));
            } else {
                acc.add(spec_h(i, j), spec_h(i, j - 1));
                acc.add(spec_h(i, j), spec_h(i - 1, j));
                acc.add(spec_h(i, j), spec_h(i + 1, j + 1));
            }
        }
    for (int j = 2; j <= n - 1; ++j) acc.add(spec_h(1, j), spec_h(2, j + 1));
    acc.add(spec_h(1, 1), spec_phi(1, n - 1));
}

// The n = 2 quiver does not follow the general catalogue.
inline void emit_n2(ArrowAccum& acc) {
    acc.add(spec_phi(1, 1), spec_h(2, 2));
    acc.add(spec_g(2, 2), spec_phi(1, 1));
    acc.add(spec_h(2, 2), spec_g(2, 2));
    acc.add(spec_phi(1, 1), spec_g(1, 1));
    acc.add(spec_h(1, 1), spec_phi(1, 1));
    acc.add(spec_h(2, 2), spec_h(1, 2));
    acc.add(spec_g(2, 2), spec_g(2, 1));
    acc.add(spec_g(1, 1), spec_g(2, 2));
}

}  // namespace detail

inline Quiver initial_quiver(const SeedLayout& lay) {
    detail::ArrowAccum acc{lay, {}};
    if (lay.n == 2)
        detail::emit_n2(acc);
    else
        detail::emit_catalogue(lay.n, acc);
    Quiver q;
    q.n_mutable = lay.n_mutable;
    q.n_stable = lay.n_stable;
    q.names = lay.names;
    q.d.assign(lay.n_mutable, 1);
    q.d[lay.id(spec_phi(1, 1)) - 1] = lay.n;
    q.arrows = std::move(acc.arrows);
    return q;
}

inline GeneralizedSeed initial_seed(const SeedLayout& lay) {
    Quiver q = initial_quiver(lay);
    GeneralizedSeed seed(matrix_from_quiver(q), lay.names);
    int special = lay.id(spec_phi(1, 1));
    int c1_offset = lay.id(spec_c(1)) - lay.n_mutable - 1;  // 0-based stable offset of c_1
    for (int r = 1; r <= lay.n - 1; ++r)
        seed.strings.set(special, r, StableMonomial::variable(lay.n_stable, c1_offset + r - 1));
    return seed;
}

template <class T>
std::vector<T> evaluate_cluster(const SeedLayout& lay, const Matrix<T>& x, const Matrix<T>& y) {
    std::vector<T> vals;
    vals.reserve(lay.specs.size());
    std::vector<T> c = c_coefficients(x, y);
    for (const FunctionSpec& s : lay.specs)
        vals.push_back(s.fam == Fam::C ? c.at(s.a) : eval_function(lay.n, s, x, y));
    return vals;
}

// Exponents of the isolated variables in the interior entries of the
// nontrivial coefficient string (rows r = 1..d-1).
inline Matrix<Int> isolated_exponent_matrix(const SeedLayout& lay, const GeneralizedSeed& seed) {
    std::vector<int> iso = seed.bmat.isolated_stable_columns();
    int special = lay.id(spec_phi(1, 1));
    int d = static_cast<int>(seed.bmat.d(special).get_si());
    Matrix<Int> b1(d - 1, static_cast<int>(iso.size()));
    for (int r = 1; r <= d - 1; ++r)
        for (size_t j = 0; j < iso.size(); ++j)
            b1.e(r, static_cast<int>(j) + 1) = seed.strings.p(special, r).exps.at(iso[j] - lay.n_mutable - 1);
    return b1;
}

// ---------------------------------------------------------------------------
// Companion seed in U. Vertices: the phi positions carry sgn * det Phi(U)
// evaluated at (I, U); the f(k,l) positions carry the minor h_{i,j}(U) with
// i = n-k-l+1, j = n-k+1, scaled by (-1)^{(n-i)(j-i)}; the h(i,i) positions
// (including the former h(1,1) slot, which carries det U) become stable; the
// c positions carry the pencil coefficients of (I, U) and stay isolated.

struct DualLayout {
    int n = 0;
    int n_mutable = 0;
    int n_stable = 0;
    std::vector<FunctionSpec> positions;  // position in the big quiver, mutable first
    std::vector<std::string> names;
    std::map<FunctionSpec, int> index;

    int id(const FunctionSpec& raw) const {
        auto it = index.find(canonical(n, raw));
        if (it == index.end()) throw std::invalid_argument("DualLayout: no vertex " + spec_name(raw));
        return it->second;
    }
};

inline std::string dual_position_name(int n, const FunctionSpec& s) {
    if (s.fam == Fam::Phi) return "psi" + std::to_string(s.a) + std::to_string(s.b);
    if (s.fam == Fam::F) {
        int i = n - s.a - s.b + 1, j = n - s.a + 1;
        return "hu" + std::to_string(i) + std::to_string(j);
    }
    if (s.fam == Fam::H) return "hu" + std::to_string(s.a) + std::to_string(s.b);
    return "cu" + std::to_string(s.a);
}

inline DualLayout build_dual_layout(int n) {
    DualLayout lay;
    lay.n = n;
    auto push = [&](const FunctionSpec& s) {
        lay.positions.push_back(s);
        lay.names.push_back(dual_position_name(n, s));
        lay.index[s] = static_cast<int>(lay.positions.size());
    };
    for (int k = 1; k <= n - 2; ++k)
        for (int l = 1; l <= n - 1 - k; ++l) push(spec_f(k, l));
    for (int k = 1; k <= n - 1; ++k)
        for (int l = 1; l <= n - k; ++l) push(spec_phi(k, l));
    lay.n_mutable = static_cast<int>(lay.positions.size());
    for (int i = 1; i <= n; ++i) push(spec_h(i, i));
    for (int r = 1; r <= n - 1; ++r) push(spec_c(r));
    lay.n_stable = static_cast<int>(lay.positions.size()) - lay.n_mutable;
    return lay;
}

inline Quiver dual_quiver(const SeedLayout& big, const DualLayout& dual) {
    Quiver full = initial_quiver(big);
    Quiver q;
    q.n_mutable = dual.n_mutable;
    q.n_stable = dual.n_stable;
    q.names = dual.names;
    q.d.assign(dual.n_mutable, 1);
    q.d[dual.id(spec_phi(1, 1)) - 1] = dual.n;
    // Keep arrows of the big quiver whose endpoints are both dual positions.
    std::map<int, int> big_to_dual;
    for (size_t p = 0; p < dual.positions.size(); ++p)
        big_to_dual[big.id(dual.positions[p])] = static_cast<int>(p) + 1;
    for (const auto& [e, mult] : full.arrows) {
        auto a = big_to_dual.find(e.first), b = big_to_dual.find(e.second);
        if (a != big_to_dual.end() && b != big_to_dual.end()) q.arrows[{a->second, b->second}] = mult;
    }
    return q;
}

inline GeneralizedSeed dual_seed(const SeedLayout& big, const DualLayout& dual) {
    Quiver q = dual_quiver(big, dual);
    GeneralizedSeed seed(matrix_from_quiver(q), dual.names);
    int special = dual.id(spec_phi(1, 1));
    int c1_offset = dual.id(spec_c(1)) - dual.n_mutable - 1;
    for (int r = 1; r <= dual.n - 1; ++r)
        seed.strings.set(special, r, StableMonomial::variable(dual.n_stable, c1_offset + r - 1));
    return seed;
}

template <class T>
T eval_dual_function(int n, const FunctionSpec& pos, const Matrix<T>& u) {
    Matrix<T> eye = Matrix<T>::identity(n);
    if (pos.fam == Fam::Phi) return eval_phi(n, pos.a, pos.b, eye, u);
    if (pos.fam == Fam::F) {
        int i = n - pos.a - pos.b + 1, j = n - pos.a + 1;
        T v = eval_h(n, i, j, u);
        return (static_cast<long>(n - i) * (j - i)) % 2 == 0 ? v : -v;
    }
    if (pos.fam == Fam::H) return eval_h(n, pos.a, pos.b, u);
    if (pos.fam == Fam::C) return c_coefficients(Matrix<T>::identity(n), u).at(pos.a);
    throw std::logic_error("eval_dual_function: unreachable");
}

template <class T>
std::vector<T> evaluate_dual_cluster(const DualLayout& lay, const Matrix<T>& u) {
    std::vector<T> vals;
    vals.reserve(lay.positions.size());
    for (const FunctionSpec& s : lay.positions) vals.push_back(eval_dual_function(lay.n, s, u));
    return vals;
}

// ---------------------------------------------------------------------------
// Diagonal torus weights: the exponent vectors of a cluster function under
// (X, Y) -> (T X, T Y) (right weight) and (X, Y) -> (X T, Y T) (left weight).

inline std::vector<int> delta_range(int n, int a, int b) {
    std::vector<int> v(n, 0);
    for (int i = a; i <= b && i <= n; ++i)
        if (i >= 1) v[i - 1] += 1;
    return v;
}

inline void add_vec(std::vector<int>& a, const std::vector<int>& b, int scale = 1) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
}

inline std::vector<int> left_weight(int n, const FunctionSpec& s) {
    switch (s.fam) {
        case Fam::G: return delta_range(n, s.b, n + s.b - s.a);
        case Fam::H: return delta_range(n, s.b, n);
        case Fam::F: {
            std::vector<int> v = delta_range(n, n - s.a + 1, n);
            add_vec(v, delta_range(n, n - s.b + 1, n));
            return v;
        }
        case Fam::Phi: {
            std::vector<int> v(n, n - s.a - s.b);
            v[n - 1] += n - s.a - s.b;
            add_vec(v, delta_range(n, n - s.a + 1, n));
            add_vec(v, delta_range(n, n - s.b + 1, n));
            return v;
        }
        case Fam::C: return std::vector<int>(n, 1);
    }
    throw std::logic_error("left_weight: unreachable");
}

inline std::vector<int> right_weight(int n, const FunctionSpec& s) {
    switch (s.fam) {
        case Fam::G: return delta_range(n, s.a, n);
        case Fam::H: return delta_range(n, s.a, n + s.a - s.b);
        case Fam::F: return delta_range(n, n - s.a - s.b + 1, n);
        case Fam::Phi: return std::vector<int>(n, n - s.a - s.b + 1);
        case Fam::C: return std::vector<int>(n, 1);
    }
    throw std::logic_error("right_weight: unreachable");
}

}  // namespace gencluster
