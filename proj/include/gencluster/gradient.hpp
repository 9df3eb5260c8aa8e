#pragma once

/*
 * Exact gradients of scalar matrix functions by dual-number forward passes,
 * one pass per coordinate.
 *
 * Transposed layout: grad(i,j) = d f / d x_{ji}, so that for f = det,
 * X * grad = det(X) * I (grad = adjugate), and tr(X grad f) is the pairing
 * used by the bracket formulas.
 */

#include <gencluster/matrix.hpp>

#include <utility>

namespace gencluster {

template <class F>
RatMatrix gradient(F&& f, const RatMatrix& x) {
    const int n = x.rows(), m = x.cols();
    RatMatrix g(m, n);
    DualMatrix xd = lift_dual(x);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            xd(i, j).der = 1;
            DualScalar r = f(xd);
            g(j, i) = r.der;
            xd(i, j).der = 0;
        }
    return g;
}

// Two-argument version: returns (grad_X f, grad_Y f), both transposed.
template <class F>
std::pair<RatMatrix, RatMatrix> gradient2(F&& f, const RatMatrix& x, const RatMatrix& y) {
    const int n = x.rows();
    RatMatrix gx(x.cols(), n), gy(y.cols(), y.rows());
    DualMatrix xd = lift_dual(x), yd = lift_dual(y);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < x.cols(); ++j) {
            xd(i, j).der = 1;
            gx(j, i) = f(xd, yd).der;
            xd(i, j).der = 0;
        }
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) {
            yd(i, j).der = 1;
            gy(j, i) = f(xd, yd).der;
            yd(i, j).der = 0;
        }
    return {gx, gy};
}

}  // namespace gencluster
