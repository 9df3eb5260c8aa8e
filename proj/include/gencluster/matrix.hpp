#pragma once

/*
 * Dense matrices over an exact scalar (Rat, DualScalar, or a polynomial ring).
 *
 * Conventions:
 *  - storage and operator() are 0-based;
 *  - e(i,j), block(...), submatrix(...) are 1-based inclusive, matching the
 *    interval notation [a,b] used throughout the function definitions;
 *  - det() is fraction-free (Bareiss) with row pivoting; over a non-field
 *    domain the intermediate divisions are exact by the Sylvester identity.
 */

#include <gencluster/dual.hpp>
#include <gencluster/rational.hpp>

#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

namespace gencluster {

template <class T>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, T(0)) {}
    Matrix(int r, int c, const T& fill) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, fill) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix zero(int r, int c) { return Matrix(r, c); }

    // Single matrix unit, 1-based: unit(n, i, j) = e_ij.
    static Matrix unit(int n, int i, int j) {
        Matrix m(n, n);
        m.e(i, j) = T(1);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    T& e(int i, int j) { return (*this)(i - 1, j - 1); }
    const T& e(int i, int j) const { return (*this)(i - 1, j - 1); }

    // Rows [rlo,rhi], columns [clo,chi], all 1-based inclusive.
    Matrix block(int rlo, int rhi, int clo, int chi) const {
        if (rlo < 1 || clo < 1 || rhi > r_ || chi > c_ || rlo > rhi + 1 || clo > chi + 1)
            throw dimension_error("block: bad range");
        Matrix m(rhi - rlo + 1, chi - clo + 1);
        for (int i = rlo; i <= rhi; ++i)
            for (int j = clo; j <= chi; ++j) m.e(i - rlo + 1, j - clo + 1) = e(i, j);
        return m;
    }

    // Arbitrary 1-based row/column selections (order preserved, repeats allowed).
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
        Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j) {
                if (rows[i] < 1 || rows[i] > r_ || cols[j] < 1 || cols[j] > c_)
                    throw dimension_error("submatrix: index out of range");
                m(static_cast<int>(i), static_cast<int>(j)) = e(rows[i], cols[j]);
            }
        return m;
    }

    Matrix col_range(int clo, int chi) const { return block(1, r_, clo, chi); }

    Matrix transpose() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(const Matrix& a) {
        Matrix m(a.r_, a.c_);
        for (size_t k = 0; k < a.a_.size(); ++k) m.a_[k] = -a.a_[k];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw dimension_error("matrix product: shape mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_square() const { return r_ == c_; }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw dimension_error("matrix sum: shape mismatch");
    }

    int r_, c_;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using DualMatrix = Matrix<DualScalar>;

// Horizontal concatenation; every piece must have the same row count.
template <class T>
Matrix<T> hcat(const std::vector<Matrix<T>>& parts) {
    int r = -1, c = 0;
    for (const auto& p : parts) {
        if (p.cols() == 0) continue;
        if (r < 0) r = p.rows();
        if (p.rows() != r) throw dimension_error("hcat: row mismatch");
        c += p.cols();
    }
    if (r < 0) throw dimension_error("hcat: empty");
    Matrix<T> m(r, c);
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < p.cols(); ++j) m(i, off + j) = p(i, j);
        off += p.cols();
    }
    return m;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& a, int k) {
    if (!a.is_square()) throw dimension_error("matrix_power: not square");
    Matrix<T> m = Matrix<T>::identity(a.rows());
    for (int i = 0; i < k; ++i) m = m * a;
    return m;
}

// Antidiagonal permutation matrix (w0): entry 1 at (i, n+1-i).
template <class T = Rat>
Matrix<T> antidiagonal(int n) {
    Matrix<T> m(n, n);
    for (int i = 1; i <= n; ++i) m.e(i, n + 1 - i) = T(1);
    return m;
}

template <class T>
T trace(const Matrix<T>& a) {
    if (!a.is_square()) throw dimension_error("trace: not square");
    T s(0);
    for (int i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

// tr(AB) without forming the product.
template <class T>
T trace_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) throw dimension_error("trace_product: shape mismatch");
    T s(0);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
    return s;
}

namespace detail {

// Fraction-free elimination; returns the determinant. T must be an integral
// domain whose operator/ performs the (exact) Bareiss division.
template <class T>
T det_bareiss(Matrix<T> m) {
    const int n = m.rows();
    if (n == 0) return T(1);
    T prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (is_unit(m(i, k))) {
                piv = i;
                break;
            }
        if (piv < 0) {
            bool all_zero = true;
            for (int i = k; i < n; ++i)
                if (!is_zero(m(i, k))) all_zero = false;
            if (all_zero) return T(0);
            throw genericity_error("det: non-unit pivot column");
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            m(i, k) = T(0);
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

}  // namespace detail

template <class T>
Matrix<T> adjugate(const Matrix<T>& a);

template <class T>
T det(const Matrix<T>& a) {
    if (!a.is_square()) throw dimension_error("det: not square");
    if constexpr (std::is_same_v<T, DualScalar>) {
        // Split A = V + eps D; det A = det V + eps tr(adj(V) D). Valid even
        // when det V = 0, unlike elimination in the dual ring.
        const int n = a.rows();
        RatMatrix v(n, n), d(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                v(i, j) = a(i, j).val;
                d(i, j) = a(i, j).der;
            }
        return DualScalar(detail::det_bareiss(v), trace_product(adjugate(v), d));
    } else {
        return detail::det_bareiss(a);
    }
}

// Cofactor-transpose; works over any commutative ring. Sizes here are small.
template <class T>
Matrix<T> adjugate(const Matrix<T>& a) {
    if (!a.is_square()) throw dimension_error("adjugate: not square");
    const int n = a.rows();
    Matrix<T> adj(n, n);
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    std::vector<int> all;
    for (int i = 1; i <= n; ++i) all.push_back(i);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            std::vector<int> rows, cols;
            for (int k : all)
                if (k != i) rows.push_back(k);
            for (int k : all)
                if (k != j) cols.push_back(k);
            T minor_det = det(a.submatrix(rows, cols));
            adj.e(j, i) = ((i + j) % 2 == 0) ? minor_det : -minor_det;
        }
    return adj;
}

// Gauss-Jordan inverse; requires unit pivots (throws genericity_error otherwise).
template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.is_square()) throw dimension_error("inverse: not square");
    const int n = a.rows();
    Matrix<T> m = a, inv = Matrix<T>::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (is_unit(m(i, k))) {
                piv = i;
                break;
            }
        if (piv < 0) throw genericity_error("inverse: singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m(k, j), m(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        T p = m(k, k);
        for (int j = 0; j < n; ++j) {
            m(k, j) = m(k, j) / p;
            inv(k, j) = inv(k, j) / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || is_zero(m(i, k))) continue;
            T f = m(i, k);
            for (int j = 0; j < n; ++j) {
                m(i, j) -= f * m(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Solves A X = B for X (A square, unit pivots).
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (!a.is_square() || a.rows() != b.rows()) throw dimension_error("solve: shape mismatch");
    return inverse(a) * b;
}

inline int rank(const RatMatrix& a) {
    RatMatrix m = a;
    const int r = m.rows(), c = m.cols();
    int rk = 0;
    for (int col = 0; col < c && rk < r; ++col) {
        int piv = -1;
        for (int i = rk; i < r; ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < c; ++j) std::swap(m(rk, j), m(piv, j));
        for (int i = rk + 1; i < r; ++i) {
            if (m(i, col) == 0) continue;
            Rat f = m(i, col) / m(rk, col);
            for (int j = col; j < c; ++j) m(i, j) -= f * m(rk, j);
        }
        ++rk;
    }
    return rk;
}

// Coefficients (c_1, ..., c_n) of det(lambda I - A) = lambda^n + sum c_k lambda^{n-k},
// recovered by exact interpolation at lambda = 0..n.
template <class T>
std::vector<T> charpoly_coeffs(const Matrix<T>& a) {
    if (!a.is_square()) throw dimension_error("charpoly: not square");
    const int n = a.rows();
    std::vector<T> rhs;
    Matrix<T> vand(n, n);
    for (int s = 0; s <= n - 1; ++s) {
        T lam(s + 1);
        Matrix<T> m = Matrix<T>::identity(n) * lam - a;
        T p = det(m);
        T pw(1);
        for (int k = 0; k < n; ++k) pw = pw * lam;
        rhs.push_back(p - pw);
        pw = T(1);
        for (int k = n - 1; k >= 0; --k) {
            vand(s, k) = pw;
            pw = pw * lam;
        }
    }
    // vand[s][k] = lam_s^{n-1-k}; unknowns ordered c_1..c_n.
    Matrix<T> b(n, 1);
    for (int s = 0; s < n; ++s) b(s, 0) = rhs[s];
    Matrix<T> x = solve(vand, b);
    std::vector<T> c(n);
    for (int k = 0; k < n; ++k) c[k] = x(k, 0);
    return c;
}

inline DualMatrix lift_dual(const RatMatrix& m) {
    DualMatrix d(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) d(i, j) = DualScalar(m(i, j));
    return d;
}

}  // namespace gencluster
