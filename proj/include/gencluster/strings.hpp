#pragma once

/*
 * Coefficient strings attached to the mutable rows of an extended exchange
 * matrix. Row i carries d[i]+1 monomials p[i][0..d[i]] in the stable
 * variables with p[i][0] = p[i][d[i]] = 1; rows with d[i] = 1 are trivial.
 *
 * Mutation at k reverses the string of row k and fixes the others.
 *
 * hat_coefficient returns p[i][r]^d / q[i][r], the Laurent monomial whose
 * invariance characterizes compatible Poisson brackets and global toric
 * actions.
 */

#include <gencluster/exchange_matrix.hpp>
#include <gencluster/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gencluster {

// Monomial in the stable variables: coeff * prod stable_j ^ exps[j].
// Negative exponents are allowed (Laurent monomials).
struct StableMonomial {
    Int coeff = 1;
    std::vector<int> exps;  // one entry per stable variable

    static StableMonomial one(int n_stable) { return {Int(1), std::vector<int>(n_stable, 0)}; }

    static StableMonomial variable(int n_stable, int index) {
        StableMonomial m = one(n_stable);
        m.exps.at(index) = 1;
        return m;
    }

    bool is_one() const {
        if (coeff != 1) return false;
        return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
    }

    friend StableMonomial operator*(const StableMonomial& a, const StableMonomial& b) {
        if (a.exps.size() != b.exps.size()) throw dimension_error("StableMonomial: arity mismatch");
        StableMonomial m = a;
        m.coeff *= b.coeff;
        for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] += b.exps[i];
        return m;
    }

    friend bool operator==(const StableMonomial& a, const StableMonomial& b) {
        return a.coeff == b.coeff && a.exps == b.exps;
    }

    StableMonomial pow(int k) const {
        StableMonomial m = *this;
        mpz_pow_ui(m.coeff.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(k));
        for (int& e : m.exps) e *= k;
        return m;
    }

    // Evaluate at stable values (field scalars).
    template <class T>
    T eval(const std::vector<T>& stable_values) const {
        if (stable_values.size() != exps.size()) throw dimension_error("StableMonomial::eval: arity mismatch");
        T v{Rat(coeff)};
        for (size_t i = 0; i < exps.size(); ++i) {
            for (int k = 0; k < exps[i]; ++k) v = v * stable_values[i];
            for (int k = 0; k > exps[i]; --k) v = v / stable_values[i];
        }
        return v;
    }
};

class CoefficientStrings {
public:
    CoefficientStrings() = default;

    // Trivial strings for every row of m.
    explicit CoefficientStrings(const ExtendedExchangeMatrix& m) : n_stable_(m.n_stable()) {
        for (int i = 1; i <= m.n_mutable(); ++i) {
            int di = static_cast<int>(m.d(i).get_si());
            rows_.emplace_back(di + 1, StableMonomial::one(n_stable_));
        }
    }

    int n_rows() const { return static_cast<int>(rows_.size()); }
    int n_stable() const { return n_stable_; }

    int degree(int i) const { return static_cast<int>(row(i).size()) - 1; }
    bool trivial(int i) const { return degree(i) == 1; }

    const std::vector<StableMonomial>& row(int i) const { return rows_.at(i - 1); }

    const StableMonomial& p(int i, int r) const { return row(i).at(r); }

    void set(int i, int r, const StableMonomial& m) {
        int di = degree(i);
        if ((r == 0 || r == di) && !m.is_one())
            throw std::invalid_argument("CoefficientStrings::set: end monomials must be 1");
        rows_.at(i - 1).at(r) = m;
    }

    bool ends_are_one() const {
        for (int i = 1; i <= n_rows(); ++i)
            if (!p(i, 0).is_one() || !p(i, degree(i)).is_one()) return false;
        return true;
    }

    void mutate(int k) { std::reverse(rows_.at(k - 1).begin(), rows_.at(k - 1).end()); }

    friend bool operator==(const CoefficientStrings& a, const CoefficientStrings& b) {
        return a.n_stable_ == b.n_stable_ && a.rows_ == b.rows_;
    }

private:
    int n_stable_ = 0;
    std::vector<std::vector<StableMonomial>> rows_;
};

// q[i][r]: the stable monomial measuring how far the r-th exchange term's
// stable content is from a perfect d-th power. Exponent of stable column j
// in row i: (r*b_ij) mod d for b_ij > 0, ((d-r)*(-b_ij)) mod d for b_ij < 0.
inline StableMonomial exchange_term_defect(const ExtendedExchangeMatrix& m, int i, int r) {
    int d = static_cast<int>(m.d(i).get_si());
    StableMonomial q = StableMonomial::one(m.n_stable());
    for (int j = m.n_mutable() + 1; j <= m.n_total(); ++j) {
        Int b = m.e(i, j);
        Int ex;
        if (b > 0)
            ex = (r * b) % d;
        else if (b < 0)
            ex = ((d - r) * (-b)) % d;
        else
            continue;
        q.exps[j - m.n_mutable() - 1] += static_cast<int>(ex.get_si());
    }
    return q;
}

// p_hat[i][r] = p[i][r]^d / q[i][r] as a Laurent monomial in the stable
// variables.
inline StableMonomial hat_coefficient(const ExtendedExchangeMatrix& m, const CoefficientStrings& s, int i,
                                      int r) {
    int d = static_cast<int>(m.d(i).get_si());
    StableMonomial q = exchange_term_defect(m, i, r);
    StableMonomial ph = s.p(i, r).pow(d);
    for (size_t j = 0; j < ph.exps.size(); ++j) ph.exps[j] -= q.exps[j];
    return ph;
}

}  // namespace gencluster
