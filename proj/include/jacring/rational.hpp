#ifndef JACRING_RATIONAL_HPP
#define JACRING_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace jacring {

/// Exact scalars. All coefficients in the library are rationals kept in
/// lowest terms with a positive denominator (mpq_class canonicalizes);
/// no floating point is used anywhere.
using Integer = mpz_class;
using Rational = mpq_class;

/// k! with the convention k! = 1 for every k <= 0.
Integer factorial(long k);

/// Generalized binomial coefficient for arbitrary integer n:
///   n(n-1)...(n-h+1)/h!  for h > 0,
///   1                    for h = 0,
///   0                    for h < 0.
/// The value is always an integer; it is returned as a Rational because
/// every consumer works over Q.
Rational binomial(long n, long h);

/// base^e for e >= 0 (0^0 = 1).
Integer ipow(long base, long e);

/// Canonical text form: "p/q" with q > 0 and gcd(|p|, q) = 1, or just "p"
/// when q = 1.
std::string rational_str(const Rational& q);

/// Inverse of rational_str; accepts "p" and "p/q". Throws std::invalid_argument
/// on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace jacring

#endif
