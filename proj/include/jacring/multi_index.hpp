#ifndef JACRING_MULTI_INDEX_HPP
#define JACRING_MULTI_INDEX_HPP

#include <compare>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace jacring {

/// A non-ordered multiset I of strictly positive integers, stored in the
/// canonical non-increasing order. The empty multiset is allowed and plays
/// the role of the index of the theta/gamma column.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  /// d(I): cardinality of the multiset.
  int d() const { return static_cast<int>(entries_.size()); }
  /// s(I): sum of the entries (0 for the empty index).
  int s() const;
  bool empty() const { return entries_.empty(); }

  /// Multiset union, e.g. {2,1} united {1} = {2,1,1}.
  MultiIndex united(const MultiIndex& other) const;

  /// All distinct sub-multisets of I, including the empty one and I itself.
  std::set<MultiIndex> sub_multisets() const;

  /// Display form "{i1,...,id}" with "{}" for the empty index.
  std::string str() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;  // non-increasing, all >= 1
  void canonicalize();
};

/// The largest admissible gamma-exponent of the column of I at genus g:
/// g - s(I) - 2 d(I). A negative value means the column is empty.
int admissible_top(int g, const MultiIndex& index);

}  // namespace jacring

#endif
