#include "jacring/solver.hpp"

#include <algorithm>
#include <set>

namespace jacring {

namespace {

std::string pair_str(const PairKey& key) {
  return key.first.str() + "*" + key.second.str();
}

std::string unknown_name(const PairKey& pair, const BasisKey& key) {
  return "u_" + pair.first.str() + pair.second.str() + "->" + key.index.str() +
         "^" + std::to_string(key.m);
}

/// Product of two affine expressions; the solver never needs a genuinely
/// quadratic term (at most one factor of any g <= 8 product carries
/// unknowns), so one side must be constant.
LinearExpression mul_expr(const LinearExpression& a, const LinearExpression& b) {
  if (a.is_constant()) return a.constant() * b;
  if (b.is_constant()) return b.constant() * a;
  throw std::logic_error("nonlinear product of unknowns: (" + a.str() +
                         ") * (" + b.str() + ")");
}

/// True when `sub` is a sub-multiset of `super`.
bool is_submultiset(const MultiIndex& sub, const MultiIndex& super) {
  std::multiset<int> pool(super.entries().begin(), super.entries().end());
  for (int e : sub.entries()) {
    auto it = pool.find(e);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

}  // namespace

SymbolicCycle SymbolicModel::basis(const MultiIndex& index, int m) const {
  auto sub = substitutions.find(index);
  if (sub != substitutions.end())
    return SymbolicCycle::lift(star_gamma(m, sub->second));
  SymbolicCycle out(genus());
  if (admissible.contains(index))
    out.add(BasisKey{index, m}, LinearExpression(Rational(1)));
  return out;
}

SymbolicCycle SymbolicModel::basic_product(const MultiIndex& i,
                                           const MultiIndex& j) const {
  if (i.empty()) return basis(j, 0);
  if (j.empty()) return basis(i, 0);
  auto it = basics.find(make_pair_key(i, j));
  return it == basics.end() ? SymbolicCycle(genus()) : it->second;
}

SymbolicModel build_symbolic_model(
    const AdmissibleSet& a, const std::map<MultiIndex, Cycle>& substitutions) {
  SymbolicModel sm;
  sm.admissible = a;
  sm.substitutions = substitutions;
  const int g = a.genus;

  std::vector<MultiIndex> gens;
  for (const MultiIndex& index : a.indexes)
    if (!index.empty()) gens.push_back(index);

  for (size_t x = 0; x < gens.size(); ++x)
    for (size_t y = x; y < gens.size(); ++y) {
      const PairKey pair = make_pair_key(gens[x], gens[y]);
      const MultiIndex& I = pair.first;
      const MultiIndex& J = pair.second;
      SymbolicCycle entry(g);
      if (I.d() == 1 && J.d() == 1) {
        // Formula (23). The i+j >= g-2 branch is checked first so the
        // denominator g-i-j-2 is only evaluated where it is >= 1.
        const int i = I.s(), j = J.s();
        if (i + j >= g - 2) {
          sm.provenance[pair_str(pair)] = "(23), zero branch i+j >= g-2";
        } else {
          entry += sm.basis(I.united(J), 0);
          const Rational c = binomial(i + j + 2, i + 1) / (g - i - j - 2);
          entry -= c * sm.basis(MultiIndex{i + j}, 1);
          sm.provenance[pair_str(pair)] = "(23)";
        }
      } else {
        // General homogeneous combination of the valid keys of the right
        // bidegree, with one fresh unknown per key.
        const int dim = I.d() + J.d();
        const int s = I.s() + J.s();
        for (const MultiIndex& K : a.indexes) {
          if (K.s() != s) continue;
          const int m = dim - K.d();
          if (m < 0 || m > admissible_top(g, K)) continue;
          const BasisKey key{K, m};
          entry.add(key, LinearExpression::unknown(unknown_name(pair, key)));
        }
        sm.provenance[pair_str(pair)] =
            entry.is_zero() ? "zero by bigrading" : "declared unknowns";
      }
      sm.basics.emplace(pair, std::move(entry));
    }
  return sm;
}

SymbolicCycle sym_pontryagin(const SymbolicModel& model, const SymbolicCycle& x,
                             const SymbolicCycle& y) {
  SymbolicCycle out(model.genus());
  for (const auto& [kx, ex] : x.terms())
    for (const auto& [ky, ey] : y.terms()) {
      const LinearExpression scale = mul_expr(ex, ey);
      const Rational c = binomial(kx.m + ky.m, kx.m);
      const SymbolicCycle shifted =
          star_gamma(kx.m + ky.m, model.basic_product(kx.index, ky.index));
      for (const auto& [kb, eb] : shifted.terms())
        out.add(kb, mul_expr(scale, c * eb));
    }
  return out;
}

ConstraintSystem triple_relation_constraints(const SymbolicModel& model, int h,
                                             int i, int j) {
  ConstraintSystem system;
  if (h < 1 || i < 1 || j < 1) return system;
  const int g = model.genus();
  if (!model.admissible.contains(MultiIndex{h}) ||
      !model.admissible.contains(MultiIndex{i}) ||
      !model.admissible.contains(MultiIndex{j}))
    return system;

  const SymbolicCycle bh = model.basis(MultiIndex{h}, 0);
  const SymbolicCycle bi = model.basis(MultiIndex{i}, 0);
  const SymbolicCycle bj = model.basis(MultiIndex{j}, 0);

  // (lambda_h * lambda_i * lambda_j) . Theta; Theta = 1! Theta^1/1!.
  const SymbolicCycle lhs =
      dot_theta(1, sym_pontryagin(model, sym_pontryagin(model, bh, bi), bj));

  // Lemma 25 right-hand side, re-expressed through the (23) table entries.
  SymbolicCycle rhs(g);
  rhs -= binomial(i + j + 2, i + 1) *
         sym_pontryagin(model, bh, model.basis(MultiIndex{i + j}, 0));
  rhs -= binomial(j + h + 2, j + 1) *
         sym_pontryagin(model, bi, model.basis(MultiIndex{j + h}, 0));
  rhs -= binomial(h + i + 2, h + 1) *
         sym_pontryagin(model, bj, model.basis(MultiIndex{h + i}, 0));

  SymbolicCycle difference = lhs;
  difference -= rhs;
  const std::string tag = "triple(" + std::to_string(h) + "," +
                          std::to_string(i) + "," + std::to_string(j) + ")";
  for (const auto& [key, expr] : difference.terms())
    system.add(Constraint{expr, key,
                          tag + " @ " + key.index.str() + "^[" +
                              std::to_string(key.m) + "]"});
  return system;
}

namespace {

struct ColumnAction {
  enum class Kind { Remove, Substitute } kind;
  MultiIndex index;
  Cycle value;  // for Substitute: the m = 0 alias of the column

  ColumnAction(Kind k, MultiIndex i, Cycle v)
      : kind(k), index(std::move(i)), value(std::move(v)) {}
};

/// Inspects the per-key equations of one triple relation, stratified by the
/// number of entries d of the key's index (Corollary 13: distinct d-strata
/// are independent, so each stratum must vanish separately).
///
/// - constant residual on a single column  -> the column is forced to zero;
/// - constant residual across >= 2 columns -> a forced proportionality
///   (e.g. lambda_{2,2} = -10/3 lambda_{3,1} at g = 8);
/// - anything with unknowns                -> an ordinary linear equation
///   (valid because columns in A are nonzero by hypothesis).
std::optional<ColumnAction> analyze_fragment(const SymbolicModel& sm,
                                             const ConstraintSystem& fragment,
                                             ConstraintSystem& equations) {
  std::map<int, std::vector<const Constraint*>> strata;
  for (const Constraint& c : fragment.equations)
    strata[c.key.index.d()].push_back(&c);

  for (const auto& [d, group] : strata) {
    (void)d;
    const bool all_constant =
        std::all_of(group.begin(), group.end(),
                    [](const Constraint* c) { return c->expr.is_constant(); });
    if (group.size() >= 2) {
      if (!all_constant)
        throw std::logic_error(
            "mixed unknown/multi-column stratum is out of scope");
      // Eliminate the lexicographically smallest column of the stratum:
      // c_e * lambda_e + sum c_k * lambda_k = 0. All keys share the same m
      // and the same admissible_top, so the relation holds column-wise.
      const Constraint* elim = *std::min_element(
          group.begin(), group.end(), [](const Constraint* a, const Constraint* b) {
            return a->key.index < b->key.index;
          });
      Cycle value(sm.genus());
      for (const Constraint* c : group) {
        if (c == elim) continue;
        value.add(BasisKey{c->key.index, 0},
                  -c->expr.constant() / elim->expr.constant());
      }
      return ColumnAction(ColumnAction::Kind::Substitute, elim->key.index,
                          value);
    }
    const Constraint* only = group.front();
    if (only->expr.is_constant())
      // Nonzero constant times a single column: the column must vanish.
      return ColumnAction(ColumnAction::Kind::Remove, only->key.index,
                          Cycle(sm.genus()));
    equations.add(*only);
  }
  return std::nullopt;
}

}  // namespace

Resolution resolve_model(const CaseDescriptor& c) {
  // Columns the case declares nonzero must survive resolution.
  const AdmissibleSet required_set = make_admissible(c.genus, c.nonzero, c.gonality);
  std::vector<MultiIndex> start(required_set.indexes.begin(),
                                required_set.indexes.end());
  for (const MultiIndex& index : c.auto_columns) start.push_back(index);
  AdmissibleSet a = make_admissible(c.genus, start, c.gonality);

  std::map<MultiIndex, Cycle> substitutions;
  Resolution res;

  const auto remove_column = [&](const MultiIndex& index) {
    // Downward-closure contrapositive: every super-multiset goes too; for a
    // singleton {i}, Corollary 24 kills every column with an entry >= i.
    std::vector<MultiIndex> doomed;
    for (const MultiIndex& other : a.indexes) {
      const bool superset = is_submultiset(index, other) && !other.empty();
      const bool tail = index.d() == 1 &&
                        std::any_of(other.entries().begin(), other.entries().end(),
                                    [&](int e) { return e >= index.s(); });
      if (superset || tail) doomed.push_back(other);
    }
    for (const MultiIndex& dead : doomed) {
      if (required_set.contains(dead))
        throw SolverInconsistency(
            "case " + c.label + ": constraints annihilate the required column " +
                dead.str(),
            {});
      a.indexes.erase(dead);
      res.removed_columns.push_back(dead);
    }
  };

  SymbolicModel sm;
  ConstraintSystem equations;
  for (int round = 0;; ++round) {
    if (round > 32)
      throw std::logic_error("resolve_model failed to stabilize");
    sm = build_symbolic_model(a, substitutions);
    equations = ConstraintSystem{};
    bool acted = false;
    const int bound = c.genus - 3;  // beyond h+i+j = g-3 both sides vanish
    for (int h = 1; 3 * h <= bound && !acted; ++h)
      for (int i = h; h + 2 * i <= bound && !acted; ++i)
        for (int j = i; h + i + j <= bound && !acted; ++j) {
          const ConstraintSystem fragment =
              triple_relation_constraints(sm, h, i, j);
          ConstraintSystem linear;
          const std::optional<ColumnAction> action =
              analyze_fragment(sm, fragment, linear);
          if (action) {
            if (action->kind == ColumnAction::Kind::Remove) {
              if (required_set.contains(action->index))
                throw SolverInconsistency(
                    "case " + c.label + ": constraints annihilate the required column " +
                        action->index.str(),
                    {});
              remove_column(action->index);
            } else {
              substitutions.emplace(action->index, action->value);
              a.indexes.erase(action->index);
            }
            acted = true;
            break;
          }
          equations.merge(linear);
        }
    if (!acted) break;
  }

  const Solution sol = solve(equations);
  if (sol.status == Solution::Status::Inconsistent)
    throw SolverInconsistency("case " + c.label + ": inconsistent constraints",
                              sol.witness);
  res.assignment = sol.assignment;
  res.substitutions = substitutions;

  // Declared unknowns that no surviving equation pinned down stay free.
  std::set<std::string> declared;
  for (const auto& [_, entry] : sm.basics)
    for (const auto& [__, expr] : entry.terms())
      for (const auto& [name, ___] : expr.coefficients()) declared.insert(name);
  for (const std::string& name : declared)
    if (!res.assignment.count(name)) res.free_unknowns.push_back(name);

  res.model.admissible = a;
  res.model.substitutions = substitutions;
  res.model.provenance = sm.provenance;
  res.complete = res.free_unknowns.empty();
  if (res.complete) {
    for (const auto& [pair, entry] : sm.basics)
      res.model.basics.emplace(pair, entry.specialize(res.assignment));
    const AssociativityReport report = check_associativity(res.model);
    if (!report.ok())
      throw std::runtime_error("case " + c.label +
                               ": resolved table fails associativity");
  }
  return res;
}

}  // namespace jacring
