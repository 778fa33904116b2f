// Copyright 2026 The netsize Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>

namespace netsize {

/// A counted collection over a totally ordered element type.
///
/// Multiplicities are always positive: removing the last copy of an element
/// erases its key, so support_size() is the number of stored keys. The
/// cardinality (sum of multiplicities) is cached.
template <typename T>
class Multiset {
 public:
  using Counts = std::map<T, std::size_t>;

  Multiset() = default;
  Multiset(std::initializer_list<T> items) {
    for (const T& item : items) insert(item);
  }

  template <typename Range>
  static Multiset from_range(const Range& range) {
    Multiset out;
    for (const auto& item : range) out.insert(item);
    return out;
  }

  void insert(const T& item, std::size_t copies = 1) {
    if (copies == 0) return;
    counts_[item] += copies;
    total_ += copies;
  }

  /// Removes up to `copies` occurrences; returns how many were removed.
  std::size_t erase(const T& item, std::size_t copies = 1) {
    auto it = counts_.find(item);
    if (it == counts_.end()) return 0;
    const std::size_t removed = std::min(copies, it->second);
    it->second -= removed;
    total_ -= removed;
    if (it->second == 0) counts_.erase(it);
    return removed;
  }

  std::size_t count(const T& item) const {
    auto it = counts_.find(item);
    return it == counts_.end() ? 0 : it->second;
  }

  bool contains(const T& item) const { return counts_.contains(item); }

  /// ⟨X⟩: sum of multiplicities.
  std::size_t cardinality() const { return total_; }
  /// |X*|: number of distinct elements.
  std::size_t support_size() const { return counts_.size(); }
  bool empty() const { return total_ == 0; }

  const Counts& counts() const { return counts_; }

  bool is_submultiset_of(const Multiset& other) const {
    for (const auto& [item, n] : counts_) {
      if (other.count(item) < n) return false;
    }
    return true;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  Counts counts_;
  std::size_t total_ = 0;
};

/// Disjoint union: multiplicities add.
template <typename T>
Multiset<T> msum(const Multiset<T>& a, const Multiset<T>& b) {
  Multiset<T> out = a;
  for (const auto& [item, n] : b.counts()) out.insert(item, n);
  return out;
}

/// Intersection: element-wise minimum multiplicity.
template <typename T>
Multiset<T> mintersect(const Multiset<T>& a, const Multiset<T>& b) {
  const Multiset<T>& small = a.support_size() <= b.support_size() ? a : b;
  const Multiset<T>& large = &small == &a ? b : a;
  Multiset<T> out;
  for (const auto& [item, n] : small.counts()) {
    out.insert(item, std::min(n, large.count(item)));
  }
  return out;
}

/// Clamped difference: element-wise max(0, a - b).
template <typename T>
Multiset<T> mdiff(const Multiset<T>& a, const Multiset<T>& b) {
  Multiset<T> out;
  for (const auto& [item, n] : a.counts()) {
    const std::size_t m = b.count(item);
    if (n > m) out.insert(item, n - m);
  }
  return out;
}

/// Canonical text form, e.g. "{1,1,2}" (elements ascending).
template <typename T>
std::string to_string(const Multiset<T>& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [item, n] : m.counts()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!first) os << ',';
      os << item;
      first = false;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace netsize
