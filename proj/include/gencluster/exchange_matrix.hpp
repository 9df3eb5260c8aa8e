#pragma once

/*
 * Extended exchange matrix for a generalized cluster structure.
 *
 * The matrix has one row per mutable variable and one column per variable
 * (mutable columns first, then stable ones). Each mutable row i carries a
 * positive integer d[i] dividing every entry of the mutable part of that row;
 * rows with d[i] > 1 are the ones whose exchange relations use nontrivial
 * coefficient strings.
 */

#include <gencluster/matrix.hpp>

#include <stdexcept>
#include <vector>

namespace gencluster {

class ExtendedExchangeMatrix {
public:
    ExtendedExchangeMatrix() : n_mutable_(0), n_stable_(0) {}
    ExtendedExchangeMatrix(int n_mutable, int n_stable)
        : n_mutable_(n_mutable),
          n_stable_(n_stable),
          b_(Matrix<Int>::zero(n_mutable, n_mutable + n_stable)),
          d_(n_mutable, 1) {}

    int n_mutable() const { return n_mutable_; }
    int n_stable() const { return n_stable_; }
    int n_total() const { return n_mutable_ + n_stable_; }

    // 1-based entry access; rows range over mutable variables only.
    Int& e(int i, int j) { return b_.e(i, j); }
    const Int& e(int i, int j) const { return b_.e(i, j); }

    Int& d(int i) { return d_.at(i - 1); }
    const Int& d(int i) const { return d_.at(i - 1); }

    const Matrix<Int>& matrix() const { return b_; }

    Matrix<Int> principal_part() const { return b_.block(1, n_mutable_, 1, n_mutable_); }

    // Row-rescaled matrix: mutable columns divided by the row's d, stable
    // columns kept. Its principal part is the quiver adjacency matrix.
    Matrix<Int> rescaled() const {
        Matrix<Int> m = b_;
        for (int i = 1; i <= n_mutable_; ++i)
            for (int j = 1; j <= n_mutable_; ++j) m.e(i, j) /= d_[i - 1];
        return m;
    }

    bool divisibility_ok() const {
        for (int i = 1; i <= n_mutable_; ++i)
            for (int j = 1; j <= n_mutable_; ++j)
                if (e(i, j) % d(i) != 0) return false;
        return true;
    }

    // The principal part of rescaled() must be skew-symmetric, which makes
    // the principal part of the matrix itself skew-symmetrizable.
    bool is_consistent() const {
        for (const Int& di : d_)
            if (di < 1) return false;
        if (!divisibility_ok()) return false;
        for (int i = 1; i <= n_mutable_; ++i)
            for (int j = 1; j <= n_mutable_; ++j)
                if (e(i, j) * d(j) != -e(j, i) * d(i)) return false;
        return true;
    }

    // Stable columns no exchange relation touches.
    std::vector<int> isolated_stable_columns() const {
        std::vector<int> out;
        for (int j = n_mutable_ + 1; j <= n_total(); ++j) {
            bool iso = true;
            for (int i = 1; i <= n_mutable_ && iso; ++i)
                if (e(i, j) != 0) iso = false;
            if (iso) out.push_back(j);
        }
        return out;
    }

    void mutate(int k) {
        if (k < 1 || k > n_mutable_) throw dimension_error("ExtendedExchangeMatrix::mutate: k out of range");
        Matrix<Int> nb = b_;
        for (int i = 1; i <= n_mutable_; ++i) {
            for (int j = 1; j <= n_total(); ++j) {
                if (i == k || j == k) {
                    nb.e(i, j) = -e(i, j);
                } else {
                    Int bik = e(i, k), bkj = e(k, j);
                    nb.e(i, j) = e(i, j) + (abs(bik) * bkj + bik * abs(bkj)) / 2;
                }
            }
        }
        b_ = nb;
    }

private:
    int n_mutable_;
    int n_stable_;
    Matrix<Int> b_;
    std::vector<Int> d_;
};

}  // namespace gencluster
