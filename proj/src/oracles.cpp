#include "jacring/oracles.hpp"

#include <stdexcept>

namespace jacring {

Rational bracket(int s, int n) {
  if (s < 0) throw std::invalid_argument("bracket requires s >= 0");
  if (n < 0 || n > s + 2) return Rational(0);
  const Rational sign(((s + n) % 2 == 0) ? 1 : -1);
  return sign * binomial(s + 2, n) / Rational(factorial(s + 2));
}

Rational xi_pair(int g, int i, int j, int t) {
  if (g < 1 || i < 0 || j < 0 || t < 0)
    throw std::invalid_argument("xi_pair requires g >= 1 and i, j, t >= 0");
  Rational sum(0);
  for (int m = 1; m <= i + 2; ++m)
    for (int n = 1; n <= j + 2; ++n) {
      const Integer mt = ipow(m, t + 2), nt = ipow(n, t + 2);
      const Integer mixed = ipow(m + n, t + 2);
      const Integer value = Integer(long(m) * m * g + long(m) * n) * nt +
                            Integer(long(n) * n * g + long(m) * n) * mt -
                            Integer(long(m) * n) * mixed;
      sum += bracket(i, m) * bracket(j, n) * Rational(value);
    }
  return sum;
}

Rational xi_pair_closed(int g, int i, int j) {
  if (i == 0 && j == 0) return Rational(2 * g - 2);
  if (i == 0) return Rational(g - j - 2);
  if (j == 0) return Rational(g - i - 2);
  return -binomial(i + j + 2, i + 1);
}

Rational TripleCoefficientTable::at(int r, int t) const {
  auto it = xi.find(r >= t ? std::pair{r, t} : std::pair{t, r});
  return it == xi.end() ? Rational(0) : it->second;
}

TripleCoefficientTable xi_triple(int g, int h, int i, int j) {
  if (g < 1 || h < 1 || i < 1 || j < 1)
    throw std::invalid_argument("xi_triple requires g >= 1 and h, i, j >= 1");
  TripleCoefficientTable table;
  table.g = g;
  table.h = h;
  table.i = i;
  table.j = j;
  const int top = h + i + j;

  const auto accumulate = [&](int r, int t, const Rational& coeff) {
    if (coeff == 0) return;
    const auto key = r >= t ? std::pair{r, t} : std::pair{t, r};
    Rational& slot = table.xi[key];
    slot += coeff;
    if (slot == 0) table.xi.erase(key);
  };

  for (int l = 1; l <= h + 2; ++l)
    for (int m = 1; m <= i + 2; ++m)
      for (int n = 1; n <= j + 2; ++n) {
        const Rational w = bracket(h, l) * bracket(i, m) * bracket(j, n);
        if (w == 0) continue;
        // The six terms of (25.1). Each pairs two multiplication-pushed
        // copies of C; distributing C = sum C_(s) with the substitution
        // mult(q)_* C_(s) = q^(s+2) C_(s) turns the pair
        // (mult(p)C, mult(q)C) into sum_{r,t} p^(r+2) q^(t+2) C_(r)*C_(t).
        struct Term {
          long scalar_g, scalar_lin;  // scalar = scalar_g * g + scalar_lin
          long p, q;                  // the two pushforward multipliers
        };
        const Term terms[6] = {
            {long(n) * n, long(n) * l + long(n) * m, l, m},
            {long(l) * l, long(l) * m + long(l) * n, m, n},
            {long(m) * m, long(m) * n + long(m) * l, n, l},
            {0, -long(l) * m, l + m, n},
            {0, -long(m) * n, m + n, l},
            {0, -long(n) * l, n + l, m},
        };
        for (const Term& term : terms) {
          const Rational scalar =
              w * Rational(Integer(term.scalar_g) * g + term.scalar_lin);
          if (scalar == 0) continue;
          for (int r = 0; r <= top; ++r)
            for (int t = 0; r + t <= top; ++t)
              accumulate(r, t,
                         scalar * Rational(ipow(term.p, r + 2) *
                                           ipow(term.q, t + 2)));
        }
      }
  return table;
}

}  // namespace jacring
