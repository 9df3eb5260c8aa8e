#pragma once

/*
 * Gauss factorization X = X_{>0} X_0 X_{<0} into an upper unipotent, a
 * diagonal, and a lower unipotent factor. It exists exactly when all
 * trailing principal minors of X are nonzero; pivots are checked and a
 * genericity_error is thrown otherwise, which makes the routine usable over
 * dual numbers as well.
 */

#include <gencluster/matrix.hpp>

namespace gencluster {

template <class T>
struct GaussFactors {
    Matrix<T> upper;  // unipotent upper triangular
    Matrix<T> diag;   // diagonal
    Matrix<T> lower;  // unipotent lower triangular

    Matrix<T> nonneg() const { return upper * diag; }  // X_{>=0}
    Matrix<T> nonpos() const { return diag * lower; }  // X_{<=0}
};

// Eliminate from the bottom-right corner upward: after conjugating by the
// order-reversing permutation the factorization is plain LDU, so pivots are
// the trailing principal minors' ratios.
template <class T>
GaussFactors<T> gauss_factor(const Matrix<T>& x) {
    if (!x.is_square()) throw dimension_error("gauss_factor: not square");
    int n = x.rows();
    Matrix<T> w0 = antidiagonal<T>(n);
    Matrix<T> a = w0 * x * w0;

    Matrix<T> l = Matrix<T>::identity(n);
    for (int k = 0; k < n; ++k) {
        if (is_zero(a(k, k))) throw genericity_error("gauss_factor: vanishing trailing minor");
        for (int i = k + 1; i < n; ++i) {
            T f = a(i, k) / a(k, k);
            l(i, k) = f;
            for (int j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    Matrix<T> d(n, n);
    Matrix<T> u = Matrix<T>::identity(n);
    for (int i = 0; i < n; ++i) {
        d(i, i) = a(i, i);
        for (int j = i + 1; j < n; ++j) u(i, j) = a(i, j) / a(i, i);
    }
    return {w0 * l * w0, w0 * d * w0, w0 * u * w0};
}

// Z(X, Y) = (Y_{>0})^{-1} X_{>=0}, defined whenever both factorizations are.
template <class T>
Matrix<T> z_map(const Matrix<T>& x, const Matrix<T>& y) {
    GaussFactors<T> fx = gauss_factor(x);
    GaussFactors<T> fy = gauss_factor(y);
    return inverse(fy.upper) * fx.nonneg();
}

}  // namespace gencluster
