#pragma once

/*
 * The regular functions on pairs (X, Y) of n x n matrices that serve as
 * initial cluster variables, together with index canonicalization.
 *
 * Families (1-based indices):
 *   G(i,j) = det X over rows [i,n], cols [j, j+n-i], for 1 <= j <= i <= n
 *   H(i,j) = det Y over rows [i, i+n-j], cols [j,n], for 1 <= i <= j <= n
 *   F(k,l) = det [X cols n-k+1..n | Y cols n-l+1..n] over rows n-k-l+1..n
 *   Phi(k,l) = sign * det(X)^(n-k-l+1) * det Phi-block built from powers of
 *              U = X^{-1} Y (evaluated through adj(X) Y, so it works over
 *              rings without division; any leftover det X factor divides out
 *              exactly because the function is regular)
 *   C(i) = i-th coefficient of det(X + lambda*Y) normalized by the sign
 *          (-1)^{i(n-1)}, so C(0) = det X and C(n) = det Y
 *
 * Boundary indices of F and G identify with other families; canonical()
 * folds any such spec onto the canonical representative.
 */

#include <gencluster/matrix.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace gencluster {

enum class Fam { G, H, F, Phi, C };

struct FunctionSpec {
    Fam fam;
    int a = 0;  // i or k
    int b = 0;  // j or l (unused for C)

    friend bool operator==(const FunctionSpec& x, const FunctionSpec& y) {
        return x.fam == y.fam && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const FunctionSpec& x, const FunctionSpec& y) {
        if (x.fam != y.fam) return x.fam < y.fam;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline FunctionSpec spec_g(int i, int j) { return {Fam::G, i, j}; }
inline FunctionSpec spec_h(int i, int j) { return {Fam::H, i, j}; }
inline FunctionSpec spec_f(int k, int l) { return {Fam::F, k, l}; }
inline FunctionSpec spec_phi(int k, int l) { return {Fam::Phi, k, l}; }
inline FunctionSpec spec_c(int i) { return {Fam::C, i, 0}; }

inline std::string spec_name(const FunctionSpec& s) {
    switch (s.fam) {
        case Fam::G: return "g" + std::to_string(s.a) + std::to_string(s.b);
        case Fam::H: return "h" + std::to_string(s.a) + std::to_string(s.b);
        case Fam::F: return "f" + std::to_string(s.a) + std::to_string(s.b);
        case Fam::Phi: return "phi" + std::to_string(s.a) + std::to_string(s.b);
        case Fam::C: return "c" + std::to_string(s.a);
    }
    return "?";
}

// Fold boundary indices onto the canonical vertex set:
//   F(k,0) = G(n-k+1, n-k+1),  F(0,l) = H(n-l+1, n-l+1),
//   F(k, n-k) sits at the Phi(k, n-k) vertex,
//   G(i, i+1) = F(n-i, 1).
inline FunctionSpec canonical(int n, FunctionSpec s) {
    if (s.fam == Fam::G && s.b == s.a + 1) return canonical(n, spec_f(n - s.a, 1));
    if (s.fam == Fam::F) {
        if (s.a == 0 && s.b == 0) throw std::invalid_argument("canonical: F(0,0)");
        if (s.a == 0) return spec_h(n - s.b + 1, n - s.b + 1);
        if (s.b == 0) return spec_g(n - s.a + 1, n - s.a + 1);
        if (s.a + s.b == n) return spec_phi(s.a, s.b);
    }
    return s;
}

inline bool spec_in_range(int n, const FunctionSpec& s) {
    switch (s.fam) {
        case Fam::G: return 1 <= s.b && s.b <= s.a && s.a <= n;
        case Fam::H: return 1 <= s.a && s.a <= s.b && s.b <= n;
        case Fam::F: return s.a >= 1 && s.b >= 1 && s.a + s.b <= n - 1;
        case Fam::Phi: return s.a >= 1 && s.b >= 1 && s.a + s.b <= n;
        case Fam::C: return 1 <= s.a && s.a <= n - 1;
    }
    return false;
}

// Sign attached to Phi(k,l).
inline int sign_skl(int n, int k, int l) {
    long e;
    if (n % 2 == 0)
        e = static_cast<long>(k) * (l + 1);
    else
        e = (n - 1) / 2 + static_cast<long>(k) * (k - 1) / 2 + static_cast<long>(l) * (l - 1) / 2;
    return (e % 2 == 0) ? 1 : -1;
}

template <class T>
T eval_g(int n, int i, int j, const Matrix<T>& x) {
    if (!(1 <= j && j <= i && i <= n)) throw std::invalid_argument("eval_g: bad indices");
    return det(x.block(i, n, j, j + n - i));
}

template <class T>
T eval_h(int n, int i, int j, const Matrix<T>& y) {
    if (!(1 <= i && i <= j && j <= n)) throw std::invalid_argument("eval_h: bad indices");
    return det(y.block(i, i + n - j, j, n));
}

template <class T>
T eval_f(int n, int k, int l, const Matrix<T>& x, const Matrix<T>& y) {
    if (k < 0 || l < 0 || k + l > n || k + l == 0) throw std::invalid_argument("eval_f: bad indices");
    std::vector<Matrix<T>> blocks;
    if (k > 0) blocks.push_back(x.block(1, n, n - k + 1, n));
    if (l > 0) blocks.push_back(y.block(1, n, n - l + 1, n));
    return det(hcat(blocks).block(n - k - l + 1, n, 1, k + l));
}

// Multiply by value^e (e may be negative; negative powers divide, which for
// polynomial scalars requires the division to be exact).
template <class T>
T scale_by_power(T value, const T& base, long e) {
    for (long t = 0; t < e; ++t) value = value * base;
    for (long t = 0; t > e; --t) value = value / base;
    return value;
}

template <class T>
T eval_phi(int n, int k, int l, const Matrix<T>& x, const Matrix<T>& y) {
    if (k < 1 || l < 1 || k + l > n) throw std::invalid_argument("eval_phi: bad indices");
    int t = n - k - l + 1;
    T dx = det(x);
    Matrix<T> w = adjugate(x) * y;  // det(X) * U
    std::vector<Matrix<T>> blocks;
    if (k > 0) blocks.push_back(Matrix<T>::identity(n).block(1, n, n - k + 1, n));
    if (l > 0) blocks.push_back(w.block(1, n, n - l + 1, n));
    Matrix<T> p = w;
    for (int m = 2; m <= t; ++m) {
        p = p * w;
        blocks.push_back(p.block(1, n, n, n));
    }
    T d = det(hcat(blocks));
    // The assembled determinant equals det(Phi) * det(X)^e with
    // e = l + (2 + 3 + ... + t); the target is sign * det(X)^t * det(Phi).
    long e = l + (static_cast<long>(t) * (t + 1) / 2 - 1);
    T val = scale_by_power(d, dx, t - e);
    return (sign_skl(n, k, l) == 1) ? val : -val;
}

// Coefficients a_0..a_n of det(X + lambda Y) as a polynomial in lambda,
// computed by interpolation (requires division by small integers).
template <class T>
std::vector<T> det_pencil_coeffs(const Matrix<T>& x, const Matrix<T>& y) {
    int n = x.rows();
    int npts = n + 1;
    std::vector<T> rhs;
    rhs.reserve(npts);
    for (int j = 0; j < npts; ++j) {
        Matrix<T> m = x + T(static_cast<long>(j)) * y;
        rhs.push_back(det(m));
    }
    Matrix<T> vand(npts, npts);
    for (int i = 0; i < npts; ++i) {
        T p(1L);
        for (int j = 0; j < npts; ++j) {
            vand(i, j) = p;
            p = p * T(static_cast<long>(i));
        }
    }
    // Cramer's rule keeps every division exact: the system has an integer
    // Vandermonde matrix and a solution with entries in the scalar ring.
    T dv = det(vand);
    std::vector<T> out;
    out.reserve(npts);
    for (int i = 0; i < npts; ++i) {
        Matrix<T> vi = vand;
        for (int r = 0; r < npts; ++r) vi(r, i) = rhs[r];
        out.push_back(det(vi) / dv);
    }
    return out;
}

// C(i) with the sign normalization det(X + lambda Y) = sum lambda^i s_i c_i,
// s_i = (-1)^{i(n-1)}.
template <class T>
std::vector<T> c_coefficients(const Matrix<T>& x, const Matrix<T>& y) {
    int n = x.rows();
    std::vector<T> a = det_pencil_coeffs(x, y);
    for (int i = 0; i <= n; ++i)
        if ((static_cast<long>(i) * (n - 1)) % 2 != 0) a[i] = -a[i];
    return a;
}

template <class T>
T eval_function(int n, const FunctionSpec& s, const Matrix<T>& x, const Matrix<T>& y) {
    switch (s.fam) {
        case Fam::G: return eval_g(n, s.a, s.b, x);
        case Fam::H: return eval_h(n, s.a, s.b, y);
        case Fam::F: return eval_f(n, s.a, s.b, x, y);
        case Fam::Phi: return eval_phi(n, s.a, s.b, x, y);
        case Fam::C: return c_coefficients(x, y).at(s.a);
    }
    throw std::logic_error("eval_function: unreachable");
}

}  // namespace gencluster
