#ifndef JACRING_CYCLE_HPP
#define JACRING_CYCLE_HPP

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "jacring/admissible.hpp"
#include "jacring/multi_index.hpp"
#include "jacring/rational.hpp"

namespace jacring {

/// A basis cycle lambda_I^[m]. Keys with m outside [0, admissible_top(g, I)]
/// or with I outside the admissible set denote the zero cycle and are never
/// stored. Via I = {} the key also covers the theta/gamma column:
///   lambda_{}^[g-k] = Theta^k/k!,  lambda_{}^[m] = Gamma^{*m}/m!,
///   lambda_{}^[0] = {o},           lambda_{}^[g] = X.
struct BasisKey {
  MultiIndex index;
  int m = 0;

  int dimension() const { return index.d() + m; }
  /// Beauville degree.
  int degree() const { return index.s(); }

  auto operator<=>(const BasisKey&) const = default;
};

/// A finite rational linear combination of basis cycles over a fixed genus.
/// Zero coefficients and m-out-of-range keys are dropped at insertion, so a
/// cycle is canonical by construction. Membership of new indexes in an
/// admissible set is the responsibility of the creation sites (make_basis
/// and the model's product table).
class Cycle {
 public:
  explicit Cycle(int genus) : genus_(genus) {}

  int genus() const { return genus_; }
  const std::map<BasisKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * lambda_key, normalizing away zero and out-of-range terms.
  void add(const BasisKey& key, const Rational& coeff);

  Rational coeff(const BasisKey& key) const;

  Cycle& operator+=(const Cycle& other);
  Cycle& operator-=(const Cycle& other);
  Cycle& operator*=(const Rational& scalar);
  friend Cycle operator+(Cycle a, const Cycle& b) { return a += b; }
  friend Cycle operator-(Cycle a, const Cycle& b) { return a -= b; }
  friend Cycle operator*(const Rational& s, Cycle c) { return c *= s; }
  bool operator==(const Cycle&) const = default;

 private:
  int genus_;
  std::map<BasisKey, Rational> terms_;
};

/// lambda_I^[m] over (g, A): the single-term cycle when I is admissible and
/// 0 <= m <= admissible_top(g, I), otherwise the zero cycle. Entries of I
/// must be strictly positive (MultiIndex enforces this).
Cycle make_basis(int g, const AdmissibleSet& a, const MultiIndex& index, int m);

/// Theta^k/k! = lambda_{}^[g-k] for 0 <= k <= g, zero otherwise.
Cycle theta_power(int g, int k);

/// Fourier transform on the lambda basis (12.3):
/// lambda_I^[m] -> (-1)^m lambda_I^[g-s-2d-m], extended linearly.
Cycle fourier(const Cycle& c);

/// Push-forward along multiplication by n: scales lambda_I^[m] by
/// n^(2d + 2m + s).
Cycle mult_pushforward(long n, const Cycle& c);

/// Pull-back along multiplication by n: scales lambda_I^[m] by
/// n^(2g - 2d - 2m - s). The exponents of the two maps sum to 2g.
Cycle mult_pullback(long n, const Cycle& c);

/// Pontryagin product with Gamma^{*k}/k! = lambda_{}^[k] (18):
/// lambda_I^[m] -> binomial(m+k, m) lambda_I^[m+k]; out-of-range terms
/// vanish. Requires k >= 0.
Cycle star_gamma(int k, const Cycle& c);

/// Intersection with Theta^h/h! (12.4):
/// lambda_I^[m] -> binomial(g-s-2d-m+h, h) lambda_I^[m-h]; terms with
/// m - h < 0 vanish. Requires h >= 0.
Cycle dot_theta(int h, const Cycle& c);

/// Splits c into its Beauville-homogeneous parts, keyed by s, in increasing
/// order of s; re-summing the parts gives back c.
std::vector<std::pair<int, Cycle>> beauville_components(const Cycle& c);

/// True when every term of c has the same dimension and the same Beauville
/// degree (vacuously true for zero).
bool is_bihomogeneous(const Cycle& c);

}  // namespace jacring

#endif
