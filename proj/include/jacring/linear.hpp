#ifndef JACRING_LINEAR_HPP
#define JACRING_LINEAR_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "jacring/cycle.hpp"

namespace jacring {

/// An affine-linear combination of named rational unknowns:
/// constant + sum coeff_u * u. Zero coefficients are never stored.
class LinearExpression {
 public:
  LinearExpression() = default;
  explicit LinearExpression(Rational constant) : constant_(std::move(constant)) {}
  static LinearExpression unknown(const std::string& name);

  const Rational& constant() const { return constant_; }
  const std::map<std::string, Rational>& coefficients() const { return coeffs_; }
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  LinearExpression& operator+=(const LinearExpression& other);
  LinearExpression& operator-=(const LinearExpression& other);
  LinearExpression& operator*=(const Rational& scalar);
  friend LinearExpression operator+(LinearExpression a, const LinearExpression& b) { return a += b; }
  friend LinearExpression operator-(LinearExpression a, const LinearExpression& b) { return a -= b; }
  friend LinearExpression operator*(const Rational& s, LinearExpression e) { return e *= s; }

  /// Evaluates under a (partial) assignment; unknowns not in the assignment
  /// stay symbolic.
  LinearExpression substitute(const std::map<std::string, Rational>& assignment) const;

  std::string str() const;
  bool operator==(const LinearExpression&) const = default;

 private:
  Rational constant_ = 0;
  std::map<std::string, Rational> coeffs_;
};

/// A cycle whose coefficients are LinearExpressions. All the diagonal
/// operators of cycle_algebra lift term-wise; specializing the unknowns
/// yields an ordinary Cycle.
class SymbolicCycle {
 public:
  explicit SymbolicCycle(int genus) : genus_(genus) {}
  static SymbolicCycle lift(const Cycle& c);

  int genus() const { return genus_; }
  const std::map<BasisKey, LinearExpression>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisKey& key, const LinearExpression& expr);

  SymbolicCycle& operator+=(const SymbolicCycle& other);
  SymbolicCycle& operator-=(const SymbolicCycle& other);
  SymbolicCycle& operator*=(const Rational& scalar);
  friend SymbolicCycle operator-(SymbolicCycle a, const SymbolicCycle& b) { return a -= b; }
  friend SymbolicCycle operator*(const Rational& s, SymbolicCycle c) { return c *= s; }

  Cycle specialize(const std::map<std::string, Rational>& assignment) const;

 private:
  int genus_;
  std::map<BasisKey, LinearExpression> terms_;
};

/// star_gamma lifted to symbolic cycles.
SymbolicCycle star_gamma(int k, const SymbolicCycle& c);
/// dot_theta lifted to symbolic cycles.
SymbolicCycle dot_theta(int h, const SymbolicCycle& c);

/// One equation expr = 0, tagged with the basis key it came from and a
/// human-readable origin for solver reports.
struct Constraint {
  LinearExpression expr;
  BasisKey key;
  std::string origin;
};

struct ConstraintSystem {
  std::vector<Constraint> equations;
  std::set<std::string> unknowns;

  void add(Constraint c);
  void merge(const ConstraintSystem& other);
};

struct Solution {
  enum class Status { Unique, Parametrized, Inconsistent };
  Status status = Status::Unique;
  std::map<std::string, Rational> assignment;   // solved unknowns
  std::vector<std::string> free_unknowns;       // unconstrained unknowns
  std::vector<std::string> witness;             // origins proving inconsistency
};

/// Exact Gaussian elimination over Q with a fixed (sorted) unknown order,
/// so the pivot sequence and the reported solution are deterministic.
Solution solve(const ConstraintSystem& system);

}  // namespace jacring

#endif
