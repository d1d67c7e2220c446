#include "jacring/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacring {

LinearExpression LinearExpression::unknown(const std::string& name) {
  LinearExpression e;
  e.coeffs_[name] = 1;
  return e;
}

LinearExpression& LinearExpression::operator+=(const LinearExpression& other) {
  constant_ += other.constant_;
  for (const auto& [name, c] : other.coeffs_) {
    Rational& mine = coeffs_[name];
    mine += c;
    if (mine == 0) coeffs_.erase(name);
  }
  return *this;
}

LinearExpression& LinearExpression::operator-=(const LinearExpression& other) {
  LinearExpression negated = other;
  negated *= Rational(-1);
  return *this += negated;
}

LinearExpression& LinearExpression::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    constant_ = 0;
    coeffs_.clear();
    return *this;
  }
  constant_ *= scalar;
  for (auto& [_, c] : coeffs_) c *= scalar;
  return *this;
}

LinearExpression LinearExpression::substitute(
    const std::map<std::string, Rational>& assignment) const {
  LinearExpression out(constant_);
  for (const auto& [name, c] : coeffs_) {
    auto it = assignment.find(name);
    if (it == assignment.end())
      out += c * LinearExpression::unknown(name);
    else
      out += LinearExpression(c * it->second);
  }
  return out;
}

std::string LinearExpression::str() const {
  std::string out = rational_str(constant_);
  for (const auto& [name, c] : coeffs_)
    out += " + " + rational_str(c) + "*" + name;
  return out;
}

SymbolicCycle SymbolicCycle::lift(const Cycle& c) {
  SymbolicCycle out(c.genus());
  for (const auto& [key, coeff] : c.terms())
    out.add(key, LinearExpression(coeff));
  return out;
}

void SymbolicCycle::add(const BasisKey& key, const LinearExpression& expr) {
  if (expr.is_zero()) return;
  if (key.m < 0 || key.m > admissible_top(genus_, key.index)) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, expr);
    return;
  }
  it->second += expr;
  if (it->second.is_zero()) terms_.erase(it);
}

SymbolicCycle& SymbolicCycle::operator+=(const SymbolicCycle& other) {
  for (const auto& [key, e] : other.terms_) add(key, e);
  return *this;
}

SymbolicCycle& SymbolicCycle::operator-=(const SymbolicCycle& other) {
  for (const auto& [key, e] : other.terms_) add(key, Rational(-1) * e);
  return *this;
}

SymbolicCycle& SymbolicCycle::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, e] : terms_) e *= scalar;
  return *this;
}

Cycle SymbolicCycle::specialize(
    const std::map<std::string, Rational>& assignment) const {
  Cycle out(genus_);
  for (const auto& [key, expr] : terms_) {
    const LinearExpression value = expr.substitute(assignment);
    if (!value.is_constant())
      throw std::invalid_argument("specialize: unresolved unknown in " +
                                  value.str());
    out.add(key, value.constant());
  }
  return out;
}

SymbolicCycle star_gamma(int k, const SymbolicCycle& c) {
  if (k < 0) throw std::invalid_argument("star_gamma requires k >= 0");
  SymbolicCycle out(c.genus());
  for (const auto& [key, expr] : c.terms())
    out.add(BasisKey{key.index, key.m + k}, binomial(key.m + k, key.m) * expr);
  return out;
}

SymbolicCycle dot_theta(int h, const SymbolicCycle& c) {
  if (h < 0) throw std::invalid_argument("dot_theta requires h >= 0");
  SymbolicCycle out(c.genus());
  for (const auto& [key, expr] : c.terms()) {
    if (key.m - h < 0) continue;
    const long top = admissible_top(c.genus(), key.index);
    out.add(BasisKey{key.index, key.m - h}, binomial(top - key.m + h, h) * expr);
  }
  return out;
}

void ConstraintSystem::add(Constraint c) {
  for (const auto& [name, _] : c.expr.coefficients()) unknowns.insert(name);
  equations.push_back(std::move(c));
}

void ConstraintSystem::merge(const ConstraintSystem& other) {
  for (const Constraint& c : other.equations) add(c);
}

Solution solve(const ConstraintSystem& system) {
  const std::vector<std::string> names(system.unknowns.begin(),
                                       system.unknowns.end());
  const size_t n = names.size();
  std::map<std::string, size_t> column;
  for (size_t c = 0; c < n; ++c) column[names[c]] = c;

  // Row = coefficients, rhs, and the set of contributing equation indices
  // (tracked so an inconsistency can name its witnesses).
  struct Row {
    std::vector<Rational> a;
    Rational rhs;
    std::set<size_t> sources;
  };
  std::vector<Row> rows;
  for (size_t e = 0; e < system.equations.size(); ++e) {
    const Constraint& c = system.equations[e];
    Row row{std::vector<Rational>(n, Rational(0)), -c.expr.constant(), {e}};
    for (const auto& [name, coeff] : c.expr.coefficients())
      row.a[column.at(name)] = coeff;
    rows.push_back(std::move(row));
  }

  Solution out;
  std::vector<long> pivot_row_of(n, -1);
  size_t next_row = 0;
  for (size_t col = 0; col < n && next_row < rows.size(); ++col) {
    size_t p = next_row;
    while (p < rows.size() && rows[p].a[col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next_row], rows[p]);
    Row& pivot = rows[next_row];
    const Rational inv = 1 / pivot.a[col];
    for (size_t c = col; c < n; ++c) pivot.a[c] *= inv;
    pivot.rhs *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == next_row || rows[r].a[col] == 0) continue;
      const Rational f = rows[r].a[col];
      for (size_t c = col; c < n; ++c) rows[r].a[c] -= f * pivot.a[c];
      rows[r].rhs -= f * pivot.rhs;
      rows[r].sources.insert(pivot.sources.begin(), pivot.sources.end());
    }
    pivot_row_of[col] = static_cast<long>(next_row);
    ++next_row;
  }

  for (const Row& row : rows) {
    if (std::all_of(row.a.begin(), row.a.end(),
                    [](const Rational& x) { return x == 0; }) &&
        row.rhs != 0) {
      out.status = Solution::Status::Inconsistent;
      for (size_t e : row.sources)
        out.witness.push_back(system.equations[e].origin);
      return out;
    }
  }

  for (size_t col = 0; col < n; ++col)
    if (pivot_row_of[col] < 0) out.free_unknowns.push_back(names[col]);
  for (size_t col = 0; col < n; ++col) {
    if (pivot_row_of[col] < 0) continue;
    const Row& row = rows[static_cast<size_t>(pivot_row_of[col])];
    // Only report pivots that do not depend on a free unknown.
    bool depends_on_free = false;
    for (size_t c = col + 1; c < n; ++c)
      if (row.a[c] != 0 && pivot_row_of[c] < 0) depends_on_free = true;
    if (!depends_on_free) out.assignment[names[col]] = row.rhs;
  }
  out.status = out.free_unknowns.empty() ? Solution::Status::Unique
                                         : Solution::Status::Parametrized;
  return out;
}

}  // namespace jacring
