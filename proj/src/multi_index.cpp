#include "jacring/multi_index.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jacring {

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : entries_(entries) {
  canonicalize();
}

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  canonicalize();
}

void MultiIndex::canonicalize() {
  for (int e : entries_)
    if (e < 1) throw std::invalid_argument("multi-index entries must be >= 1");
  std::sort(entries_.begin(), entries_.end(), std::greater<int>());
}

int MultiIndex::s() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

MultiIndex MultiIndex::united(const MultiIndex& other) const {
  std::vector<int> all = entries_;
  all.insert(all.end(), other.entries_.begin(), other.entries_.end());
  return MultiIndex(std::move(all));
}

std::set<MultiIndex> MultiIndex::sub_multisets() const {
  std::set<MultiIndex> out;
  const int n = d();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    for (int t = 0; t < n; ++t)
      if (mask & (1u << t)) sub.push_back(entries_[t]);
    out.insert(MultiIndex(std::move(sub)));
  }
  return out;
}

std::string MultiIndex::str() const {
  std::string out = "{";
  for (size_t t = 0; t < entries_.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(entries_[t]);
  }
  return out + "}";
}

int admissible_top(int g, const MultiIndex& index) {
  return g - index.s() - 2 * index.d();
}

}  // namespace jacring
