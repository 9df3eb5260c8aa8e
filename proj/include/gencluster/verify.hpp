#pragma once

/*
 * Bracket verification for the initial extended cluster: coefficient
 * matrices of log-canonical brackets, the compatibility product, and the
 * diagonal-action weight matrix. Everything is evaluated exactly at
 * rational sample points.
 */

#include <gencluster/brackets.hpp>
#include <gencluster/initial_seed.hpp>

namespace gencluster {

struct ClusterPoint {
    std::vector<Rat> values;
    std::vector<DoubleGradient> grads;
};

inline ClusterPoint cluster_point(const SeedLayout& lay, const RatMatrix& x, const RatMatrix& y) {
    ClusterPoint p;
    p.values = evaluate_cluster(lay, x, y);
    p.grads.reserve(lay.specs.size());
    for (const FunctionSpec& s : lay.specs) {
        auto fn = [&lay, &s](const DualMatrix& xd, const DualMatrix& yd) {
            return eval_function(lay.n, s, xd, yd);
        };
        p.grads.push_back(double_gradient(fn, x, y));
    }
    return p;
}

// omega(u, v) = {x_u, x_v} / (x_u x_v); log-canonicity makes this matrix
// independent of the sample point.
inline RatMatrix omega_matrix(const ClusterPoint& p) {
    int m = static_cast<int>(p.values.size());
    RatMatrix omega(m, m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            if (u == v) continue;
            Rat b = bracket_double(p.grads[u], p.grads[v]);
            omega(u, v) = b / (p.values[u] * p.values[v]);
        }
    return omega;
}

// Rescaled exchange matrix times omega; compatibility demands [I_N | 0].
inline RatMatrix compatibility_product(const GeneralizedSeed& seed, const RatMatrix& omega) {
    int nm = seed.n_mutable(), nt = seed.n_total();
    RatMatrix bhat(nm, nt);
    Matrix<Int> r = seed.bmat.rescaled();
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nt; ++j) bhat(i, j) = Rat(r(i, j));
    return bhat * omega;
}

inline bool is_identity_zero_block(const RatMatrix& m, int n) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rat expect = (i == j && j < n) ? Rat(1) : Rat(0);
            if (m(i, j) != expect) return false;
        }
    return true;
}

// Weight matrix of the 2n-parameter diagonal action: column i is the vector
// of weights of every cluster function under scaling of row i (first n) or
// column i (last n) of both X and Y.
inline Matrix<Int> weight_matrix(const SeedLayout& lay) {
    int m = static_cast<int>(lay.specs.size());
    Matrix<Int> w(m, 2 * lay.n);
    for (int v = 0; v < m; ++v) {
        std::vector<int> wr = right_weight(lay.n, lay.specs[v]);
        std::vector<int> wl = left_weight(lay.n, lay.specs[v]);
        for (int i = 0; i < lay.n; ++i) {
            w(v, i) = wr[i];
            w(v, lay.n + i) = wl[i];
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// Same caches for the one-matrix family under the push-forward bracket.

struct DualClusterPoint {
    std::vector<Rat> values;
    std::vector<RatMatrix> grads;
};

inline DualClusterPoint dual_cluster_point(const DualLayout& lay, const RatMatrix& u) {
    DualClusterPoint p;
    p.values = evaluate_dual_cluster(lay, u);
    p.grads.reserve(lay.positions.size());
    for (const FunctionSpec& s : lay.positions) {
        auto fn = [&lay, &s](const DualMatrix& ud) { return eval_dual_function(lay.n, s, ud); };
        p.grads.push_back(gradient(fn, u));
    }
    return p;
}

inline RatMatrix dual_omega_matrix(const DualClusterPoint& p, const RatMatrix& u) {
    int m = static_cast<int>(p.values.size());
    RatMatrix omega(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            if (a == b) continue;
            Rat br = bracket_pushforward(p.grads[a], p.grads[b], u);
            omega(a, b) = br / (p.values[a] * p.values[b]);
        }
    return omega;
}

}  // namespace gencluster
