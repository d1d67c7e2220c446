#ifndef JACRING_MODEL_HPP
#define JACRING_MODEL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacring/admissible.hpp"
#include "jacring/cycle.hpp"

namespace jacring {

/// Unordered pair of indexes, stored with first <= second so commutativity
/// of the basic product table is structural.
using PairKey = std::pair<MultiIndex, MultiIndex>;

PairKey make_pair_key(const MultiIndex& i, const MultiIndex& j);

/// A complete algebraic model (Definition 26 / Proposition 27): a genus, a
/// g-admissible index set, and the table of basic Pontryagin products
/// lambda_I * lambda_J for non-empty I, J in A. The identity
/// lambda_{} * lambda_I = lambda_I is implicit and never stored.
///
/// `substitutions` records columns eliminated by a forced proportionality
/// (at g = 8 the relation lambda_{2,2} = -10/3 lambda_{3,1} makes the
/// {2,2} column an alias of the {3,1} column); such indexes are not members
/// of the admissible set and normalize through the substitution.
struct Model {
  AdmissibleSet admissible;
  std::map<PairKey, Cycle> basics;
  std::map<MultiIndex, Cycle> substitutions;  // index -> its m = 0 value
  std::map<std::string, std::string> provenance;

  int genus() const { return admissible.genus; }
  Cycle zero() const { return Cycle(genus()); }

  /// lambda_I^[m] in this model: zero for non-admissible I unless I has a
  /// substitution, in which case the substituted column is shifted to
  /// level m via star_gamma.
  Cycle basis(const MultiIndex& index, int m) const;

  /// Applies the substitutions to every term of c.
  Cycle normalize(const Cycle& c) const;

  /// The basic product lambda_I * lambda_J (m = 0 on both sides); the empty
  /// index acts as the Pontryagin unit.
  Cycle basic_product(const MultiIndex& i, const MultiIndex& j) const;

  /// Every valid basis key of the model, sorted.
  std::vector<BasisKey> basis_keys() const;
};

/// Full Pontryagin product (19): the bilinear extension of
///   lambda_I^[m] * lambda_J^[h]
///     = binomial(m+h, m) * star_gamma(m+h, basic_product(I, J)).
Cycle pontryagin(const Model& model, const Cycle& x, const Cycle& y);

/// Full intersection product via Fourier duality (20): on s-homogeneous
/// components, x . y = (-1)^(s(x)+s(y)) F(F(x) * F(y)), extended
/// bilinearly across Beauville components.
Cycle intersect(const Model& model, const Cycle& x, const Cycle& y);

/// Associativity report for the basic products (27.3): compares the
/// distinct bracketings of lambda_I * lambda_J * lambda_K over all triples
/// of non-empty indexes in A, using the full Pontryagin product.
struct AssociativityReport {
  struct Failure {
    MultiIndex i, j, k;
    Cycle left, right;  // (i*j)*k and i*(j*k)
  };
  long triples_checked = 0;
  std::vector<Failure> failures;
  bool ok() const { return failures.empty(); }
};

AssociativityReport check_associativity(const Model& model);

/// dim R(C) for this model: the number of valid basis keys, i.e. the sum of
/// admissible_top + 1 over the columns of A (substituted columns are not in
/// A and are not counted).
int dimension(const Model& model);

/// The operator Omega_{k;t}(W) of section 3 for W homogeneous in both
/// gradings (dimension d, Beauville degree s):
///   sum_{j=0..d} (-1)^(k+t+j)
///     [ (W . Theta^j/j!) * Theta^(s+2d-j-t-k)/(s+2d-j-t-k)! ] . Theta^t/t!
/// with the convention that negative theta exponents give zero. Throws on
/// non-homogeneous input.
Cycle omega(const Model& model, const Cycle& w, int k, int t);

/// rho_h(c) = (c . Theta^h) * Gamma^{*h}, with the *undivided* powers
/// Theta^h = h! Theta^h/h! and Gamma^{*h} = h! lambda_{}^[h]; h >= 0.
Cycle rho(const Model& model, int h, const Cycle& c);

}  // namespace jacring

#endif
