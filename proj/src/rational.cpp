#include "jacring/rational.hpp"

#include <stdexcept>

namespace jacring {

Integer factorial(long k) {
  Integer out = 1;
  for (long t = 2; t <= k; ++t) out *= t;
  return out;
}

Rational binomial(long n, long h) {
  if (h < 0) return Rational(0);
  if (h == 0) return Rational(1);
  Integer num = 1;
  for (long t = 0; t < h; ++t) num *= Integer(n - t);
  // The falling factorial of length h is always divisible by h!.
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), factorial(h).get_mpz_t());
  return Rational(q);
}

Integer ipow(long base, long e) {
  if (e < 0) throw std::invalid_argument("ipow requires e >= 0");
  Integer out;
  const Integer b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::string rational_str(const Rational& q) {
  Rational canonical = q;
  canonical.canonicalize();  // guard against raw (p, q) constructions
  return canonical.get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

}  // namespace jacring
