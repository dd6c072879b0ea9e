#pragma once

#include <gmpxx.h>

#include <string>

#include "cycgm/errors.hpp"

namespace cycgm {

using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps the invariants we need:
/// gcd(|num|, den) = 1, den > 0, zero stored as 0/1.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p" or "p/q" with optional leading minus.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    if (r.get_den() == 0) throw ZeroDenominator("rational with zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace cycgm
