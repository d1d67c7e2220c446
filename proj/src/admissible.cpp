#include "jacring/admissible.hpp"

#include <stdexcept>

namespace jacring {

std::vector<std::string> check_admissible(const AdmissibleSet& a) {
  std::vector<std::string> violations;
  if (a.genus < 1) violations.push_back("genus must be >= 1");
  if (!a.contains(MultiIndex{}))
    violations.push_back("the empty index must belong to the set");
  int max_singleton = 0;
  for (const MultiIndex& index : a.indexes) {
    if (index.s() + 2 * index.d() > a.genus)
      violations.push_back("index " + index.str() + " violates s + 2d <= g");
    for (const MultiIndex& sub : index.sub_multisets())
      if (!a.contains(sub))
        violations.push_back("index " + index.str() +
                             " is missing sub-multiset " + sub.str() +
                             " (downward closure)");
    if (index.d() == 1) max_singleton = std::max(max_singleton, index.s());
  }
  for (int i = 1; i <= max_singleton; ++i)
    if (!a.contains(MultiIndex{i}))
      violations.push_back("singleton {" + std::to_string(i) +
                           "} is missing (singleton closure)");
  // Every curve of genus g is a cover of degree <= (g+3)/2, so C_(s) = 0 for
  // s > (g-1)/2 unconditionally; a declared gonality m tightens this to
  // s <= m - 2.
  const int cap = (a.genus - 1) / 2;
  for (const MultiIndex& index : a.indexes) {
    if (index.d() != 1) continue;
    if (index.s() > cap)
      violations.push_back("singleton " + index.str() + " violates s <= floor((g-1)/2) = " +
                           std::to_string(cap));
    if (a.gonality && index.s() > *a.gonality - 2)
      violations.push_back("singleton " + index.str() + " violates the gonality bound s <= " +
                           std::to_string(*a.gonality - 2));
  }
  return violations;
}

AdmissibleSet make_admissible(int genus, const std::vector<MultiIndex>& indexes,
                              std::optional<int> gonality) {
  AdmissibleSet a;
  a.genus = genus;
  a.gonality = gonality;
  a.indexes.insert(MultiIndex{});
  int max_singleton = 0;
  for (const MultiIndex& index : indexes) {
    for (const MultiIndex& sub : index.sub_multisets()) a.indexes.insert(sub);
    for (int e : index.entries()) max_singleton = std::max(max_singleton, e);
  }
  for (int i = 1; i <= max_singleton; ++i) a.indexes.insert(MultiIndex{i});
  const std::vector<std::string> violations = check_admissible(a);
  if (!violations.empty())
    throw std::invalid_argument("not a g-admissible set: " + violations.front());
  return a;
}

}  // namespace jacring
