#pragma once

/*
 * Exact evaluation of the Poisson structures at rational points: the
 * standard Poisson-Lie bracket on GL_n, the bracket on the double, its
 * push-forward under (X, Y) -> U = X^{-1}Y, and the bracket induced on
 * upper-triangular factors.
 *
 * Gradients use the transposed layout of gradient.hpp, so grad f * X and
 * X * grad f are the right and left translates that enter the formulas.
 */

#include <concepts>

#include <gencluster/gradient.hpp>

namespace gencluster {

inline RatMatrix strict_upper(const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

inline RatMatrix strict_lower(const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < i && j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

inline RatMatrix diagonal_part(const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows() && i < a.cols(); ++i) out(i, i) = a(i, i);
    return out;
}

// R = pi_{>0} - pi_{<0} and R_+ = (R + id)/2 = pi_{>0} + pi_0/2.
inline RatMatrix r_map(const RatMatrix& a) { return strict_upper(a) - strict_lower(a); }

inline RatMatrix r_plus(const RatMatrix& a) { return strict_upper(a) + diagonal_part(a) * Rat(1, 2); }

inline Rat pair_full(const RatMatrix& a, const RatMatrix& b) { return trace_product(a, b); }

// <A, B>_0 = <pi_0 A, pi_0 B>: the diagonals multiplied entrywise.
inline Rat pair_diag(const RatMatrix& a, const RatMatrix& b) {
    Rat out(0);
    for (int i = 0; i < a.rows(); ++i) out += a(i, i) * b(i, i);
    return out;
}

// ---------------------------------------------------------------------------
// Bracket on the double, evaluated on cached gradient data.

struct DoubleGradient {
    RatMatrix gx, gy;  // transposed partial gradients
    RatMatrix el, er;  // E_L = gx X + gy Y, E_R = X gx + Y gy
    RatMatrix xgx, gxx, ygy, gyy;
};

template <class F>
DoubleGradient double_gradient(F&& f, const RatMatrix& x, const RatMatrix& y) {
    auto [gx, gy] = gradient2(f, x, y);
    DoubleGradient g{gx, gy, RatMatrix(0, 0), RatMatrix(0, 0), x * gx, gx * x, y * gy, gy * y};
    g.el = g.gxx + g.gyy;
    g.er = g.xgx + g.ygy;
    return g;
}

inline Rat bracket_double(const DoubleGradient& f1, const DoubleGradient& f2) {
    return pair_full(r_plus(f1.el), f2.el) - pair_full(r_plus(f1.er), f2.er) + pair_full(f1.xgx, f2.ygy) -
           pair_full(f1.gxx, f2.gyy);
}

template <class F1, class F2>
Rat bracket_double(F1&& f1, F2&& f2, const RatMatrix& x, const RatMatrix& y) {
    return bracket_double(double_gradient(f1, x, y), double_gradient(f2, x, y));
}

// ---------------------------------------------------------------------------
// Standard Poisson-Lie bracket on one copy of the group.

// Sign fixed so that {x_11, x_12} = x_11 x_12 / 2: the diagonal embedding
// into the double and the triangular-factor map are then Poisson rather
// than anti-Poisson.
inline Rat bracket_sklyanin(const RatMatrix& g1, const RatMatrix& g2, const RatMatrix& x) {
    RatMatrix l1 = x * g1, l2 = x * g2;
    RatMatrix r1 = g1 * x, r2 = g2 * x;
    return (pair_full(r_map(r1), r2) - pair_full(r_map(l1), l2)) / 2;
}

template <class F1, class F2>
    requires std::invocable<F1&, const DualMatrix&>
Rat bracket_sklyanin(F1&& f1, F2&& f2, const RatMatrix& x) {
    return bracket_sklyanin(gradient(f1, x), gradient(f2, x), x);
}

// ---------------------------------------------------------------------------
// Push-forward of the double bracket under (X, Y) -> U = X^{-1}Y.

inline Rat bracket_pushforward(const RatMatrix& g1, const RatMatrix& g2, const RatMatrix& u) {
    RatMatrix c1 = g1 * u - u * g1;
    RatMatrix c2 = g2 * u - u * g2;
    return pair_full(r_plus(c1), c2) - pair_full(c1, g2 * u);
}

template <class F1, class F2>
    requires std::invocable<F1&, const DualMatrix&>
Rat bracket_pushforward(F1&& f1, F2&& f2, const RatMatrix& u) {
    return bracket_pushforward(gradient(f1, u), gradient(f2, u), u);
}

// ---------------------------------------------------------------------------
// Bracket induced on upper-triangular factors: the Sklyanin bracket twisted
// by the diagonal shift tau(B) = S B S^T with S the superdiagonal shift.

inline RatMatrix shift_tau(const RatMatrix& b) {
    int m = b.rows();
    RatMatrix s(m, m);
    for (int i = 0; i + 1 < m; ++i) s(i, i + 1) = 1;
    return s * b * s.transpose();
}

inline Rat bracket_triangular(const RatMatrix& g1, const RatMatrix& g2, const RatMatrix& a) {
    Rat twist = pair_diag(a * g1, shift_tau(g2 * a)) - pair_diag(shift_tau(g1 * a), a * g2);
    return bracket_sklyanin(g1, g2, a) + twist / 2;
}

template <class F1, class F2>
    requires std::invocable<F1&, const DualMatrix&>
Rat bracket_triangular(F1&& f1, F2&& f2, const RatMatrix& a) {
    return bracket_triangular(gradient(f1, a), gradient(f2, a), a);
}

}  // namespace gencluster
