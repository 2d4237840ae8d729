#pragma once

#include <gmpxx.h>

#include <string>

namespace hartogs {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q" and a leading '-'. The result is canonicalized.
// Throws Error(MalformedInput) on anything else, including q = 0.
Rational parse_rational(const std::string& text);

// Canonical "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

Integer binomial(long n, long k);

// Natural log of a positive rational, accurate even when the value
// overflows a double.
double log_rational(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace hartogs
