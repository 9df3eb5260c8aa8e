#pragma once

/*
 * Normal forms of a generic matrix under conjugation by unipotent lower
 * triangular matrices: U = N_- B_+ C N_-^{-1} with C the cyclic permutation
 * (an upper Hessenberg form with a single corner entry), and the variant
 * U = N_- B_+ W_0 N_-^{-1} with the order-reversing permutation. Both are
 * templated so they can be differentiated through with dual numbers.
 */

#include <gencluster/gauss.hpp>

namespace gencluster {

// C = e_21 + ... + e_{n,n-1} + e_1n.
template <class T = Rat>
Matrix<T> cyclic_shift(int n) {
    Matrix<T> c(n, n);
    for (int i = 0; i + 1 < n; ++i) c(i + 1, i) = T(1L);
    c(0, n - 1) = T(1L);
    return c;
}

template <class T>
struct ConjugationFactors {
    Matrix<T> nminus;  // unipotent lower triangular
    Matrix<T> bplus;   // upper triangular
};

// U = N_- B_+ C N_-^{-1}. The construction conjugates U to an upper
// Hessenberg matrix whose last column is u_1n e_1: first clear the last
// column below the first row, then run a Hessenberg reduction whose
// eliminations never touch the first column of the accumulated factor.
template <class T>
ConjugationFactors<T> bc_factor(const Matrix<T>& u) {
    if (!u.is_square()) throw dimension_error("bc_factor: not square");
    int n = u.rows();
    Matrix<T> a = u;
    Matrix<T> nm = Matrix<T>::identity(n);  // accumulates N_-^{-1}

    if (n > 1) {
        if (is_zero(a(0, n - 1))) throw genericity_error("bc_factor: vanishing corner entry");
        for (int i = 1; i < n; ++i) {
            T m = a(i, n - 1) / a(0, n - 1);
            for (int j = 0; j < n; ++j) a(i, j) = a(i, j) - m * a(0, j);  // rows: (I - m e_{i1}) a
            for (int j = 0; j < n; ++j) a(j, 0) = a(j, 0) + m * a(j, i);  // cols: a (I + m e_{i1})
            for (int j = 0; j < n; ++j) nm(i, j) = nm(i, j) - m * nm(0, j);
        }
    }
    for (int col = 0; col + 2 < n; ++col) {
        if (is_zero(a(col + 1, col))) throw genericity_error("bc_factor: vanishing Hessenberg pivot");
        for (int i = col + 2; i < n; ++i) {
            T m = a(i, col) / a(col + 1, col);
            for (int j = 0; j < n; ++j) a(i, j) = a(i, j) - m * a(col + 1, j);
            for (int j = 0; j < n; ++j) a(j, col + 1) = a(j, col + 1) + m * a(j, i);
            for (int j = 0; j < n; ++j) nm(i, j) = nm(i, j) - m * nm(col + 1, j);
        }
    }
    return {inverse(nm), a * cyclic_shift<T>(n).transpose()};
}

// U = N_- B_+ W_0 N_-^{-1} via the Gauss factorization of W_0 U:
// N_- = W_0 (W_0 U)_{>0} W_0 and B_+ = W_0 (W_0 U)_{<=0} W_0 (W_0 U)_{>0}.
template <class T>
ConjugationFactors<T> bw_factor(const Matrix<T>& u) {
    if (!u.is_square()) throw dimension_error("bw_factor: not square");
    int n = u.rows();
    Matrix<T> w0 = antidiagonal<T>(n);
    GaussFactors<T> f = gauss_factor(w0 * u);
    return {w0 * f.upper * w0, w0 * f.nonpos() * w0 * f.upper};
}

template <class T>
struct NmnFactors {
    T nu;
    Matrix<T> nminus;  // unipotent lower triangular, trivial first column
    Matrix<T> m;       // m_1n = 0 and m_{i,n+2-j} = 0 for 2 <= j < i <= n
};

// U = (1 + nu e_12) N_- M N_-^{-1} (1 - nu e_12). The similarity by
// 1 - nu e_12 with nu = u_1n / u_2n clears the (1,n) entry, and the trailing
// (n-1)-block of the result is put into B_+ W_0 form; the choice of nu needs
// column 2 and column n to be distinct, so n >= 3.
template <class T>
NmnFactors<T> nmn_factor(const Matrix<T>& u) {
    if (!u.is_square()) throw dimension_error("nmn_factor: not square");
    int n = u.rows();
    if (n < 3) throw std::invalid_argument("nmn_factor: needs n >= 3");
    if (is_zero(u(1, n - 1))) throw genericity_error("nmn_factor: vanishing (2,n) entry");
    T nu = u(0, n - 1) / u(1, n - 1);
    Matrix<T> shear_in = Matrix<T>::identity(n);
    shear_in(0, 1) = nu;  // 1 + nu e_12
    Matrix<T> shear_out = Matrix<T>::identity(n);
    shear_out(0, 1) = -nu;
    Matrix<T> uprime = shear_out * u * shear_in;
    ConjugationFactors<T> inner = bw_factor(uprime.block(2, n, 2, n));
    Matrix<T> nminus = Matrix<T>::identity(n);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j <= i; ++j) nminus(i, j) = inner.nminus(i - 1, j - 1);
    return {nu, nminus, inverse(nminus) * uprime * nminus};
}

template <class T>
struct CompanionReduction {
    Matrix<T> delta;
    Matrix<T> nplus;  // unipotent upper triangular
    Matrix<T> mstar;  // companion form: rows 2..n are the shifted identity
    std::vector<T> gamma;  // first row of mstar
};

// Diagonal conjugator making an upper Hessenberg matrix unit-subdiagonal:
// delta_n = last and delta_i = delta_{i+1} m_{i+1,i} walking up.
template <class T>
Matrix<T> hessenberg_normalizer(const Matrix<T>& m, const T& last) {
    if (!m.is_square()) throw dimension_error("hessenberg_normalizer: not square");
    int n = m.rows();
    if (is_zero(last)) throw genericity_error("hessenberg_normalizer: zero last entry");
    std::vector<T> d(n, T(1L));
    d[n - 1] = last;
    for (int i = n - 2; i >= 0; --i) {
        if (is_zero(m(i + 1, i)))
            throw genericity_error("hessenberg_normalizer: zero subdiagonal entry");
        d[i] = d[i + 1] * m(i + 1, i);
    }
    Matrix<T> delta(n, n);
    for (int i = 0; i < n; ++i) delta(i, i) = d[i];
    return delta;
}

// Conjugates delta mbar delta^{-1} (which must be upper Hessenberg with unit
// subdiagonal) to the companion form [[gamma],[1_{n-1} 0]]. The unipotent
// upper factor is forced: its rows, bottom to top, are e_n A^{n-i}, which
// only involve rows 2..n of A, so the first row of A never enters.
template <class T>
CompanionReduction<T> companion_reduce(const Matrix<T>& mbar, const Matrix<T>& delta) {
    if (!mbar.is_square()) throw dimension_error("companion_reduce: not square");
    int n = mbar.rows();
    Matrix<T> a = delta * mbar * inverse(delta);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < i; ++j)
            if (!is_zero(a(i, j)))
                throw genericity_error("companion_reduce: input not upper Hessenberg");
    for (int i = 0; i + 1 < n; ++i)
        if (!is_zero(a(i + 1, i) - T(1L)))
            throw genericity_error("companion_reduce: subdiagonal not normalized");
    Matrix<T> np(n, n);
    np(n - 1, n - 1) = T(1L);
    for (int i = n - 2; i >= 0; --i)
        for (int j = 0; j < n; ++j) {
            T v(0L);
            for (int k = 0; k < n; ++k) v = v + np(i + 1, k) * a(k, j);
            np(i, j) = v;
        }
    Matrix<T> mstar = np * a * inverse(np);
    std::vector<T> gamma;
    gamma.reserve(n);
    for (int j = 0; j < n; ++j) gamma.push_back(mstar(0, j));
    return {delta, np, mstar, gamma};
}

// First row of the unique companion conjugator of a unit-subdiagonal upper
// Hessenberg matrix, negated: with N^{-1} H N in companion form, returns
// (-nu_{1i}) for i = 2..n, which reproduces the first row of the companion
// form of the trailing principal (n-1)-block of H.
template <class T>
Matrix<T> hessenberg_first_row(const Matrix<T>& h) {
    int n = h.rows();
    CompanionReduction<T> red = companion_reduce(h, Matrix<T>::identity(n));
    Matrix<T> nu = inverse(red.nplus);
    Matrix<T> out(1, n - 1);
    for (int i = 1; i < n; ++i) out(0, i - 1) = -nu(0, i);
    return out;
}

// Recovers the first row of A from its last n-1 rows and the coefficients
// (c_1..c_n) of det(lambda I - A) = lambda^n + sum c_k lambda^{n-k}. The
// Krylov matrix K = [e_1, A e_1, ..., A^{n-1} e_1] satisfies K T = Q with T
// unipotent upper Toeplitz built from c and Q computable without row 1: the
// tail of each column comes from the recurrence Q_{j+1} = A Q_j + c_j e_1
// and the head is a characteristic coefficient of the trailing block. The
// first row then solves A_[1] Q = Q_[1] W_0 C_A^T W_0.
template <class T>
Matrix<T> first_row_from_spectrum(const Matrix<T>& last_rows, const std::vector<T>& c) {
    int n = last_rows.cols();
    if (last_rows.rows() != n - 1 || static_cast<int>(c.size()) != n)
        throw dimension_error("first_row_from_spectrum: shape mismatch");
    Matrix<T> trailing = last_rows.block(1, n - 1, 2, n);
    std::vector<T> ctail = charpoly_coeffs(trailing);
    Matrix<T> q(n, n);
    q(0, 0) = T(1L);
    for (int j = 1; j < n; ++j) {
        for (int i = 1; i < n; ++i) {
            T v(0L);
            for (int k = 0; k < n; ++k) v = v + last_rows(i - 1, k) * q(k, j - 1);
            q(i, j) = v;
        }
        q(0, j) = ctail[j - 1];
    }
    Matrix<T> comp(n, n);
    for (int i = 0; i + 1 < n; ++i) comp(i + 1, i) = T(1L);
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[n - 1 - i];
    Matrix<T> w0 = antidiagonal<T>(n);
    Matrix<T> rhs = q.block(1, 1, 1, n) * (w0 * comp.transpose() * w0);
    return solve(q.transpose(), rhs.transpose()).transpose();
}

// Unipotent lower conjugator of the cyclic Hessenberg form, recovered from
// the two one-sided factorizations alone: with U = B_+ N_- and
// U = N'_- (B'_+ C) N'_-^{-1}, one has N'_- = W_0 (W_0 B_+)_{>0}
// (W_0 B'_+ C)_{>0}^{-1} W_0.
template <class T>
Matrix<T> glue_cyclic_conjugator(const Matrix<T>& bplus, const Matrix<T>& hessenberg) {
    int n = bplus.rows();
    Matrix<T> w0 = antidiagonal<T>(n);
    Matrix<T> left = gauss_factor(w0 * bplus).upper;
    Matrix<T> right = gauss_factor(w0 * hessenberg).upper;
    return w0 * left * inverse(right) * w0;
}

}  // namespace gencluster
