#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace parayam {

// Exact arbitrary-precision arithmetic.  All symbolic coefficients are
// rationals; nothing in the engine ever rounds.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// q^e for integer e (e < 0 requires q != 0).
Rational rational_pow(const Rational& q, long e);

// Canonical "n" or "n/d" with d > 0.
std::string to_string(const Rational& q);

} // namespace parayam
