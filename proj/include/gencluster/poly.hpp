#pragma once

/*
 * Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients. Terms are kept in a map from exponent vectors to nonzero
 * coefficients; the map's lexicographic key order doubles as the monomial
 * order used by division.
 *
 * operator/ performs exact division and throws if the divisor does not divide
 * evenly; poly_divide returns quotient and remainder witness instead.
 */

#include <gencluster/rational.hpp>

#include <map>
#include <string>
#include <vector>

namespace gencluster {

class MultiPoly;
struct DivisionResult;
DivisionResult poly_divide(const MultiPoly& num, const MultiPoly& den);

class MultiPoly {
public:
    using Exponents = std::vector<int>;

    MultiPoly() : nvars_(0) {}
    MultiPoly(int nvars, const Int& c) : nvars_(nvars) {
        if (c != 0) terms_[Exponents(nvars, 0)] = c;
    }
    MultiPoly(long c) : nvars_(0) {  // NOLINT implicit: integer constants lift
        if (c != 0) terms_[Exponents()] = c;
    }

    static MultiPoly variable(int nvars, int index, int power = 1) {
        MultiPoly p = zero(nvars);
        Exponents e(nvars, 0);
        e[index] = power;
        p.terms_[e] = 1;
        return p;
    }

    static MultiPoly constant(int nvars, const Int& c) { return MultiPoly(nvars, c); }
    static MultiPoly zero(int nvars) { return MultiPoly(nvars, 0); }

    int nvars() const { return nvars_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponents, Int>& terms() const { return terms_; }

    bool is_constant() const {
        if (terms_.empty()) return true;
        return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
    }

    Int constant_value() const {
        if (terms_.empty()) return 0;
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? Int(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    int degree_in(int var) const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            if (e[var] > d) d = e[var];
        return d;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        align(o);
        if (o.nvars_ == nvars_) {
            for (const auto& [e, c] : o.terms_) add_term(e, c);
        } else {
            MultiPoly oo = promoted(o, nvars_);
            for (const auto& [e, c] : oo.terms_) add_term(e, c);
        }
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        align(o);
        if (o.nvars_ == nvars_) {
            for (const auto& [e, c] : o.terms_) add_term(e, -c);
        } else {
            MultiPoly oo = promoted(o, nvars_);
            for (const auto& [e, c] : oo.terms_) add_term(e, -c);
        }
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly m = zero(a.nvars_);
        for (const auto& [e, c] : a.terms_) m.terms_[e] = -c;
        return m;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly aa = a;
        aa.align(b);
        MultiPoly m = zero(aa.nvars_);
        MultiPoly bb = (b.nvars_ == aa.nvars_) ? b : promoted(b, aa.nvars_);
        for (const auto& [ea, ca] : aa.terms_)
            for (const auto& [eb, cb] : bb.terms_) {
                Exponents e(aa.nvars_);
                for (int i = 0; i < aa.nvars_; ++i) e[i] = ea[i] + eb[i];
                m.add_term(e, ca * cb);
            }
        return m;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
        MultiPoly d = a;
        d -= b;
        return d.is_zero_poly();
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    friend DivisionResult poly_divide(const MultiPoly& num, const MultiPoly& den);

    template <class T>
    T eval(const std::vector<T>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw dimension_error("MultiPoly::eval: arity mismatch");
        T s(0);
        for (const auto& [e, c] : terms_) {
            T t{Rat(c)};
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) t *= point[i];
            s += t;
        }
        return s;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int abs_c = c < 0 ? Int(-c) : c;
            out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
            first = false;
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (i < static_cast<int>(names.size())) ? names[i] : "v" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            if (mono.empty())
                out += abs_c.get_str();
            else
                out += (abs_c == 1 ? mono : abs_c.get_str() + "*" + mono);
        }
        return out;
    }

private:
    static MultiPoly promoted(const MultiPoly& p, int nvars) {
        MultiPoly m = zero(nvars);
        for (const auto& [e, c] : p.terms_) {
            Exponents ee(nvars, 0);
            for (size_t i = 0; i < e.size(); ++i) ee[i] = e[i];
            m.terms_[ee] = c;
        }
        return m;
    }

    // Constants built via MultiPoly(long) carry nvars 0; widen on demand.
    void align(const MultiPoly& o) {
        if (nvars_ < o.nvars_) *this = promoted(*this, o.nvars_);
    }

    void add_term(const Exponents& e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int nvars_;
    std::map<Exponents, Int> terms_;
};

struct DivisionResult {
    bool exact;
    MultiPoly quotient;
    MultiPoly remainder;
};

inline DivisionResult poly_divide(const MultiPoly& num, const MultiPoly& den) {
    using Exponents = MultiPoly::Exponents;
    MultiPoly n = num;
    n.align(den);
    MultiPoly d = (den.nvars() == n.nvars_) ? den : MultiPoly::promoted(den, n.nvars_);
    if (d.is_zero_poly()) throw std::domain_error("poly_divide: zero divisor");
    MultiPoly q = MultiPoly::zero(n.nvars_), rem = MultiPoly::zero(n.nvars_), r = n;
    const auto& [de, dc] = *d.terms_.rbegin();
    while (!r.terms_.empty()) {
        auto [re, rc] = *r.terms_.rbegin();
        bool mono_ok = true;
        Exponents e(r.nvars_);
        for (int i = 0; i < r.nvars_; ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) mono_ok = false;
        }
        if (mono_ok && rc % dc == 0) {
            MultiPoly t = MultiPoly::zero(r.nvars_);
            t.terms_[e] = rc / dc;
            q += t;
            r -= t * d;
        } else {
            MultiPoly t = MultiPoly::zero(r.nvars_);
            t.terms_[re] = rc;
            rem += t;
            r -= t;
        }
    }
    return {rem.is_zero_poly(), q, rem};
}

inline MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
    DivisionResult r = poly_divide(a, b);
    if (!r.exact) throw std::domain_error("MultiPoly division is not exact");
    return r.quotient;
}

inline bool is_zero(const MultiPoly& p) { return p.is_zero_poly(); }
inline bool is_unit(const MultiPoly& p) { return !p.is_zero_poly(); }

}  // namespace gencluster
