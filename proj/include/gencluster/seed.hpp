#pragma once

/*
 * Generalized seed: extended exchange matrix + coefficient strings + names,
 * with the exchange relation evaluated over any field-like scalar type.
 *
 * The exchange at a mutable k with degree d = d(k) is
 *
 *   x_k * x_k' = sum_{r=0}^{d} p[k][r] * u_>^r * v_>^[r] * u_<^(d-r) * v_<^[d-r]
 *
 * where u_> / u_< collect mutable neighbors with positive / negative row
 * entries (exponents |b_kj| / d), and v_>^[r] / v_<^[r] collect stable
 * neighbors with exponents floor(r*|b_kj| / d). Mutation replaces x_k by
 * x_k', mutates the matrix, and reverses the k-th coefficient string.
 */

#include <gencluster/exchange_matrix.hpp>
#include <gencluster/quiver.hpp>
#include <gencluster/strings.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gencluster {

template <class T>
T power_nonneg(T base, int e) {
    T out{Rat(1)};
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
}

struct GeneralizedSeed {
    ExtendedExchangeMatrix bmat;
    CoefficientStrings strings;
    std::vector<std::string> names;

    GeneralizedSeed() = default;
    GeneralizedSeed(ExtendedExchangeMatrix m, std::vector<std::string> nm = {})
        : bmat(std::move(m)), strings(bmat), names(std::move(nm)) {
        if (names.empty()) names = default_names(bmat.n_total());
        if (static_cast<int>(names.size()) != bmat.n_total())
            throw dimension_error("GeneralizedSeed: name count mismatch");
    }

    int n_mutable() const { return bmat.n_mutable(); }
    int n_stable() const { return bmat.n_stable(); }
    int n_total() const { return bmat.n_total(); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < n_total(); ++i)
            if (names[i] == name) return i + 1;
        throw std::invalid_argument("GeneralizedSeed: unknown variable " + name);
    }
};

template <class T>
std::vector<T> stable_slice(const GeneralizedSeed& seed, const std::vector<T>& x) {
    return std::vector<T>(x.begin() + seed.n_mutable(), x.end());
}

// The full exchange sum (the product x_k * x_k').
template <class T>
T exchange_sum(const GeneralizedSeed& seed, const std::vector<T>& x, int k) {
    const ExtendedExchangeMatrix& m = seed.bmat;
    if (static_cast<int>(x.size()) != m.n_total()) throw dimension_error("exchange_sum: value count");
    int d = static_cast<int>(m.d(k).get_si());
    std::vector<T> stable = stable_slice(seed, x);
    T sum{Rat(0)};
    for (int r = 0; r <= d; ++r) {
        T term = seed.strings.p(k, r).template eval<T>(stable);
        for (int j = 1; j <= m.n_total(); ++j) {
            Int b = m.e(k, j);
            if (b == 0) continue;
            long e;
            if (j <= m.n_mutable()) {
                e = (b > 0) ? (b.get_si() / d) * r : (-b.get_si() / d) * (d - r);
            } else {
                e = (b > 0) ? (r * b.get_si()) / d : ((d - r) * -b.get_si()) / d;
            }
            term = term * power_nonneg(x[j - 1], static_cast<int>(e));
        }
        sum += term;
    }
    return sum;
}

template <class T>
T exchange_value(const GeneralizedSeed& seed, const std::vector<T>& x, int k) {
    return exchange_sum(seed, x, k) / x[k - 1];
}

template <class T>
void seed_mutate(GeneralizedSeed& seed, std::vector<T>& x, int k) {
    x[k - 1] = exchange_value(seed, x, k);
    seed.bmat.mutate(k);
    seed.strings.mutate(k);
}

inline void seed_mutate(GeneralizedSeed& seed, int k) {
    seed.bmat.mutate(k);
    seed.strings.mutate(k);
}

// Monomial in cluster variables with exponents taken from row v of the
// row-rescaled matrix: the y-type coordinate attached to a mutable vertex.
template <class T>
T y_variable(const GeneralizedSeed& seed, const std::vector<T>& x, int v) {
    const ExtendedExchangeMatrix& m = seed.bmat;
    Matrix<Int> r = m.rescaled();
    T y{Rat(1)};
    for (int j = 1; j <= m.n_total(); ++j) {
        long e = r.e(v, j).get_si();
        for (long t = 0; t < e; ++t) y = y * x[j - 1];
        for (long t = 0; t > e; --t) y = y / x[j - 1];
    }
    return y;
}

}  // namespace gencluster
