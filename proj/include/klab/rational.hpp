#ifndef KLAB_RATIONAL_HPP
#define KLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace klab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

Rational parse_rational(const std::string& text);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact base^exponent; negative exponents are allowed for nonzero bases.
Rational power(const Rational& base, long exponent);

BigInt to_integer(const Rational& q); // throws Inconsistency if q is not integral

bool fits_int64(const BigInt& z);

} // namespace klab

#endif // KLAB_RATIONAL_HPP
