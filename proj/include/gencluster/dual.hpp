#pragma once

/*
 * Forward-mode dual number over the exact rationals: value + eps * deriv with
 * eps^2 = 0. Division requires an invertible (nonzero-value) divisor.
 *
 * Feeding matrix entries seeded with deriv = 1 through an evaluator yields one
 * exact partial derivative per pass.
 */

#include <gencluster/rational.hpp>

namespace gencluster {

struct DualScalar {
    Rat val;
    Rat der;

    DualScalar() : val(0), der(0) {}
    DualScalar(const Rat& v) : val(v), der(0) {}  // NOLINT implicit: scalars lift pointwise
    DualScalar(long v) : val(v), der(0) {}        // NOLINT
    DualScalar(const Rat& v, const Rat& d) : val(v), der(d) {}

    DualScalar& operator+=(const DualScalar& o) {
        val += o.val;
        der += o.der;
        return *this;
    }
    DualScalar& operator-=(const DualScalar& o) {
        val -= o.val;
        der -= o.der;
        return *this;
    }
    DualScalar& operator*=(const DualScalar& o) {
        der = der * o.val + val * o.der;
        val *= o.val;
        return *this;
    }
    DualScalar& operator/=(const DualScalar& o) {
        if (o.val == 0) throw genericity_error("dual division by non-unit");
        // (a + eps b)/(c + eps d) = a/c + eps (b c - a d)/c^2
        der = (der * o.val - val * o.der) / (o.val * o.val);
        val /= o.val;
        return *this;
    }
};

inline DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
inline DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
inline DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
inline DualScalar operator/(DualScalar a, const DualScalar& b) { return a /= b; }
inline DualScalar operator-(const DualScalar& a) { return DualScalar(-a.val, -a.der); }
inline bool operator==(const DualScalar& a, const DualScalar& b) { return a.val == b.val && a.der == b.der; }
inline bool operator!=(const DualScalar& a, const DualScalar& b) { return !(a == b); }

// Scalar traits shared by the exact field types.
inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const DualScalar& x) { return x.val == 0 && x.der == 0; }

// A "unit" may appear as an elimination pivot / divisor.
inline bool is_unit(const Rat& x) { return x != 0; }
inline bool is_unit(const DualScalar& x) { return x.val != 0; }

inline Rat value_part(const Rat& x) { return x; }
inline Rat value_part(const DualScalar& x) { return x.val; }

}  // namespace gencluster
