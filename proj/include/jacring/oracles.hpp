#ifndef JACRING_ORACLES_HPP
#define JACRING_ORACLES_HPP

#include <map>
#include <utility>

#include "jacring/rational.hpp"

namespace jacring {

/// Brute-force evaluation of the summation formulas from the proofs of
/// Lemma 21 and Lemma 25. These are independent of the closed forms used by
/// the rest of the library and serve as oracles for them.

/// [s; n] = (-1)^(s+n) binomial(s+2, n) / (s+2)! for s >= 0; zero for n < 0
/// or n > s + 2.
Rational bracket(int s, int n);

/// The coefficient xi_{i,j}^[t] of C_(t) in (C_(i) * C_(j)) . Theta,
/// computed as the double sum
///   sum_{m=1..i+2} sum_{n=1..j+2} [i;m][j;n] *
///     ((m^2 g + m n) n^(t+2) + (n^2 g + m n) m^(t+2) - m n (m+n)^(t+2)).
Rational xi_pair(int g, int i, int j, int t);

/// The (21.4) piecewise closed form for xi_{i,j}^[i+j]:
///   2g-2 for i = j = 0; g-j-2 for i = 0, j >= 1 (and symmetrically);
///   -binomial(i+j+2, i+1) for i, j >= 1.
Rational xi_pair_closed(int g, int i, int j);

/// Coefficients xi_{h,i,j}^[{r,t}] of C_(r) * C_(t) in
/// (C_(h) * C_(i) * C_(j)) . Theta, over unordered pairs keyed (r, t) with
/// r >= t and r + t <= h + i + j. Expands the six terms of (25.1) over the
/// bracket-weighted (l, m, n) grid of (25.2) with the substitution
/// mult(n)_* C_(s) = n^(s+2) C_(s).
struct TripleCoefficientTable {
  int g = 0, h = 0, i = 0, j = 0;
  std::map<std::pair<int, int>, Rational> xi;  // key (r, t), r >= t

  Rational at(int r, int t) const;
};

TripleCoefficientTable xi_triple(int g, int h, int i, int j);

}  // namespace jacring

#endif
