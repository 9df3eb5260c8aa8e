#pragma once

/*
 * Deterministic rational sample points. All randomness flows through a
 * caller-owned mt19937_64 so runs with the same seed are reproducible across
 * platforms; entries are drawn uniformly from the integers -9..9.
 */

#include <gencluster/functions.hpp>

#include <random>

namespace gencluster {

inline Int random_small_int(std::mt19937_64& rng) {
    return Int(static_cast<long>(rng() % 19) - 9);
}

inline Matrix<Rat> random_matrix(int rows, int cols, std::mt19937_64& rng) {
    Matrix<Rat> m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Rat(random_small_int(rng));
    return m;
}

// True when every trailing principal minor det A[i..n, i..n] is nonzero.
inline bool trailing_minors_nonzero(const Matrix<Rat>& a) {
    int n = a.rows();
    for (int i = 1; i <= n; ++i)
        if (det(a.block(i, n, i, n)) == 0) return false;
    return true;
}

inline bool leading_minors_nonzero(const Matrix<Rat>& a) {
    int n = a.rows();
    for (int i = 1; i <= n; ++i)
        if (det(a.block(1, i, 1, i)) == 0) return false;
    return true;
}

// A pair (X, Y) at which every function of the initial extended cluster is
// nonzero and both factors are invertible. Retries until the sample is
// generic; the rejection probability is tiny for entries in -9..9.
template <class Layout, class Evaluator>
std::pair<Matrix<Rat>, Matrix<Rat>> generic_pair(const Layout& lay, Evaluator&& eval,
                                                 std::mt19937_64& rng, int max_tries = 256) {
    int n = lay.n;
    for (int t = 0; t < max_tries; ++t) {
        Matrix<Rat> x = random_matrix(n, n, rng);
        Matrix<Rat> y = random_matrix(n, n, rng);
        if (det(x) == 0 || det(y) == 0) continue;
        bool ok = true;
        for (const Rat& v : eval(lay, x, y))
            if (v == 0) {
                ok = false;
                break;
            }
        if (ok) return {x, y};
    }
    throw std::runtime_error("generic_pair: no generic sample found");
}

}  // namespace gencluster
