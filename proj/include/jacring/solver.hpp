#ifndef JACRING_SOLVER_HPP
#define JACRING_SOLVER_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacring/linear.hpp"
#include "jacring/model.hpp"

namespace jacring {

/// A model whose basic-product entries may carry unknown rational
/// coefficients. Entries between singletons are fixed by (23); every other
/// pair whose value space is not forced to zero by the bigrading gets a
/// fresh unknown per admissible basis key.
struct SymbolicModel {
  AdmissibleSet admissible;
  std::map<PairKey, SymbolicCycle> basics;
  std::map<MultiIndex, Cycle> substitutions;
  std::map<std::string, std::string> provenance;

  int genus() const { return admissible.genus; }
  /// Substitution-aware lambda_I^[m]; zero outside the admissible set.
  SymbolicCycle basis(const MultiIndex& index, int m) const;
  SymbolicCycle basic_product(const MultiIndex& i, const MultiIndex& j) const;
};

/// Builds the symbolic table over a: (23) for singleton pairs (checking the
/// i+j >= g-2 branch before touching the denominator g-i-j-2), declared
/// unknowns named u_I_J_K_m elsewhere.
SymbolicModel build_symbolic_model(
    const AdmissibleSet& a,
    const std::map<MultiIndex, Cycle>& substitutions = {});

/// Pontryagin product on symbolic cycles. At most one factor of any scalar
/// product may carry unknowns (always the case for g <= 8); otherwise this
/// throws, since the solver is strictly affine-linear.
SymbolicCycle sym_pontryagin(const SymbolicModel& model, const SymbolicCycle& x,
                             const SymbolicCycle& y);

/// The Lemma 25 constraints for one generator triple (h, i, j >= 1):
/// equates (lambda_h * lambda_i * lambda_j) . Theta, computed with the
/// symbolic table, against
///   - binomial(i+j+2, i+1) lambda_h * lambda_{i+j}
///   - binomial(j+h+2, j+1) lambda_i * lambda_{j+h}
///   - binomial(h+i+2, h+1) lambda_j * lambda_{h+i}
/// re-expressed via (23), and emits one equation per basis key. Empty when
/// a generator is missing from A or both sides are structurally zero.
ConstraintSystem triple_relation_constraints(const SymbolicModel& model, int h,
                                             int i, int j);

/// A section-6 case: the generators declared nonzero, plus the columns whose
/// status the paper derives rather than assumes ("auto": the solver keeps,
/// removes, or substitutes them as the constraints dictate).
struct CaseDescriptor {
  int genus = 0;
  std::string label;
  std::vector<MultiIndex> nonzero;
  std::vector<MultiIndex> auto_columns;
  int expected_dimension = -1;  // -1: not specified
  std::optional<int> gonality;
};

/// Raised when a case is algebraically inadmissible (a constraint annihilates
/// a column the case declares nonzero, or the linear system is inconsistent).
class SolverInconsistency : public std::runtime_error {
 public:
  SolverInconsistency(const std::string& what, std::vector<std::string> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

struct Resolution {
  bool complete = false;  // false iff free unknowns remain
  Model model;
  std::map<std::string, Rational> assignment;
  std::vector<std::string> free_unknowns;
  std::vector<MultiIndex> removed_columns;      // columns forced to zero
  std::map<MultiIndex, Cycle> substitutions;    // columns forced proportional
};

/// Builds the admissible set from the case, installs the (23) defaults,
/// declares unknowns, generates every applicable triple relation with
/// h + i + j <= g - 3, solves exactly, applies forced column removals and
/// substitutions (restarting until stable), checks associativity, and
/// returns the resolved model. Throws SolverInconsistency for inadmissible
/// cases and std::runtime_error on an associativity failure.
Resolution resolve_model(const CaseDescriptor& c);

}  // namespace jacring

#endif
