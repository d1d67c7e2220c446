#ifndef JACRING_ADMISSIBLE_HPP
#define JACRING_ADMISSIBLE_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jacring/multi_index.hpp"

namespace jacring {

/// A g-admissible family of multi-indexes (Definition 26): it contains the
/// empty index, satisfies s(I) + 2 d(I) <= g, is downward closed under
/// sub-multisets, and its singletons form an initial segment {1},...,{i}.
/// An optional gonality m restricts singletons to {s} with s <= m - 2.
struct AdmissibleSet {
  int genus = 0;
  std::set<MultiIndex> indexes;
  std::optional<int> gonality;

  bool contains(const MultiIndex& index) const {
    return indexes.count(index) != 0;
  }
};

/// Checks every AdmissibleSet invariant and returns the list of violations
/// (empty means valid). Nothing is repaired silently.
std::vector<std::string> check_admissible(const AdmissibleSet& a);

/// Convenience: the downward/singleton closure of the given indexes over
/// genus g (drops nothing; throws if the closure would violate the grading
/// bound s + 2d <= g or the singleton cap s <= floor((g-1)/2)).
AdmissibleSet make_admissible(int genus, const std::vector<MultiIndex>& indexes,
                              std::optional<int> gonality = std::nullopt);

}  // namespace jacring

#endif
