#pragma once

/*
 * Exact rational scalar type.
 *
 * Backed by GMP's mpq_class: values are always kept in lowest terms with a
 * positive denominator (mpq_class canonicalizes on every arithmetic result;
 * the two-argument factory below canonicalizes explicitly).
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gencluster {

using Int = mpz_class;
using Rat = mpq_class;
using ExactRational = Rat;

struct genericity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct dimension_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline std::string to_string(const Int& z) { return z.get_str(); }

// Parses "a" or "a/b"; used for fixture parameters handed in on the command line.
inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace gencluster
