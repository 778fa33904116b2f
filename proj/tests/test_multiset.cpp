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

#include <doctest.h>

#include <map>
#include <random>

#include "netsize/multiset.hpp"

using netsize::Multiset;
using netsize::mdiff;
using netsize::mintersect;
using netsize::msum;
using netsize::to_string;
using IntSet = Multiset<int>;

TEST_CASE("sum adds multiplicities") {
  const IntSet s = msum(IntSet{1, 1, 2}, IntSet{1, 2, 2});
  CHECK(to_string(s) == "{1,1,1,2,2,2}");
  CHECK(s.cardinality() == 6);
  CHECK(msum(IntSet{}, IntSet{7}) == IntSet{7});
}

TEST_CASE("cardinality and support size") {
  const IntSet x{1, 1, 2, 8, 8, 8};
  CHECK(x.cardinality() == 6);
  CHECK(x.support_size() == 3);
}

TEST_CASE("intersection takes the minimum") {
  CHECK(to_string(mintersect(IntSet{1, 1, 2}, IntSet{1, 2, 2})) == "{1,2}");
  CHECK(mintersect(IntSet{3, 3}, IntSet{}).empty());
  CHECK(mintersect(IntSet{5, 5, 5}, IntSet{5, 5}) == IntSet{5, 5});
}

TEST_CASE("difference clamps at zero") {
  CHECK(to_string(mdiff(IntSet{1, 1, 2}, IntSet{1, 2, 2})) == "{1}");
  CHECK(mdiff(IntSet{9}, IntSet{9, 9}).empty());
  const IntSet a{4, 4, 6};
  CHECK(mdiff(a, a).empty());
}

TEST_CASE("erase never leaves zero entries") {
  IntSet a{2, 2, 3};
  CHECK(a.erase(2, 5) == 2);
  CHECK_FALSE(a.contains(2));
  CHECK(a.support_size() == 1);
  CHECK(a.erase(42) == 0);
  a.insert(8, 0);
  CHECK_FALSE(a.contains(8));
}

namespace {

// Independent model: a plain count map with explicit zero handling.
using Model = std::map<int, int>;

Model model_of(const IntSet& s) {
  Model m;
  for (auto [k, n] : s.counts()) m[k] = static_cast<int>(n);
  return m;
}

IntSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(0, 12);
  std::uniform_int_distribution<int> item(0, 6);
  IntSet s;
  for (int i = size(rng); i > 0; --i) s.insert(item(rng));
  return s;
}

}  // namespace

TEST_CASE("randomized algebraic laws") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 2000; ++trial) {
    const IntSet a = random_set(rng);
    const IntSet b = random_set(rng);
    const Model ma = model_of(a);
    const Model mb = model_of(b);

    CHECK(msum(a, b).cardinality() == a.cardinality() + b.cardinality());

    const IntSet i = mintersect(a, b);
    CHECK(i.is_submultiset_of(a));
    CHECK(i.is_submultiset_of(b));
    CHECK(i == mintersect(b, a));

    const IntSet d = mdiff(a, b);
    CHECK(msum(d, i) == a);

    for (int k = 0; k <= 6; ++k) {
      const int ca = ma.contains(k) ? ma.at(k) : 0;
      const int cb = mb.contains(k) ? mb.at(k) : 0;
      CHECK(static_cast<int>(i.count(k)) == std::min(ca, cb));
      CHECK(static_cast<int>(d.count(k)) == std::max(ca - cb, 0));
    }
    for (auto [k, n] : d.counts()) CHECK(n > 0);
    std::size_t total = 0;
    for (auto [k, n] : a.counts()) total += n;
    CHECK(total == a.cardinality());
  }
}
