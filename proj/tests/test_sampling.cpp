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

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "netsize/generators.hpp"
#include "netsize/sampling.hpp"

using namespace netsize;

namespace {

void check_forest(const MultiGraph& g, const RdsSample& s) {
  const auto& f = s.forest;
  REQUIRE(s.order.size() == f.sample_size());
  CHECK(f.edges.size() == s.size() - f.seeds.size());

  std::set<VertexId> unique(s.order.begin(), s.order.end());
  CHECK(unique.size() == s.size());

  std::set<VertexId> recruited;
  for (const Edge& e : f.edges) {
    CHECK(recruited.insert(e.v).second);
    CHECK_FALSE(f.is_seed(e.v));
    CHECK(f.seed_of.at(e.u) == f.seed_of.at(e.v));
    const auto nb = g.neighbors(e.u);
    CHECK(std::find(nb.begin(), nb.end(), e.v) != nb.end());
  }
  for (VertexId seed : f.seeds) CHECK(f.seed_of.at(seed) == seed);

  std::size_t covered = 0;
  for (VertexId seed : f.seeds) covered += f.component(seed).size();
  CHECK(covered == s.size());

  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s.degrees[i] == g.degree(s.order[i]));
    const auto expected = free_neighborhood(g, s.order[i], f.edges);
    CHECK(Multiset<VertexId>::from_range(s.alters[i]) == expected);
  }
}

}  // namespace

TEST_CASE("uniform sampling edge cases") {
  const MultiGraph g(10);
  Rng rng(1);
  auto all = uniform_sample(g, 10, rng);
  std::sort(all.begin(), all.end());
  CHECK(all == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(uniform_sample(g, 0, rng).empty());
  CHECK_THROWS_AS(uniform_sample(g, 11, rng), std::invalid_argument);
}

TEST_CASE("uniform sampling is uniform") {
  const MultiGraph g(10);
  Rng rng(2);
  std::vector<int> hits(10, 0);
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) ++hits[uniform_sample(g, 1, rng)[0]];
  for (int h : hits) CHECK(static_cast<double>(h) / draws == doctest::Approx(0.1).epsilon(0.1));

  // Pairs: each of the 45 unordered pairs equally likely.
  std::map<std::pair<VertexId, VertexId>, int> pairs;
  for (int i = 0; i < 45000; ++i) {
    auto p = uniform_sample(g, 2, rng);
    ++pairs[std::minmax(p[0], p[1])];
  }
  CHECK(pairs.size() == 45);
  for (auto [k, c] : pairs) CHECK(c == doctest::Approx(1000).epsilon(0.15));
}

TEST_CASE("forced trace on the 4-cycle") {
  const auto g = fixtures::cycle4();
  std::set<std::vector<VertexId>> orders;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RdsConfig c;
    c.target = 4;
    c.recruit_law = RecruitLaw::always(2);
    c.initial_seeds = {1};
    c.seed = seed;
    const auto s = rds_capture(g, c);
    CHECK(s.forest.edges.size() == 3);
    CHECK(s.forest.seeds.size() == 1);
    orders.insert(s.order);
    check_forest(g, s);
  }
  const std::set<std::vector<VertexId>> allowed{{1, 2, 4, 3}, {1, 4, 2, 3}};
  for (const auto& o : orders) CHECK(allowed.contains(o));
}

TEST_CASE("isolated vertices force reseeding") {
  const MultiGraph g(6);
  RdsConfig c;
  c.num_seeds = 2;
  c.target = 3;
  c.seed = 5;
  const auto s = rds_capture(g, c);
  CHECK(s.size() == 3);
  CHECK(s.forest.edges.empty());
  CHECK(s.forest.seeds.size() == 3);
}

TEST_CASE("recruit law is respected") {
  Rng rng(3);
  const auto g = generate({Family::ConfigPoisson, 10.0, 3000}, rng);
  RdsConfig c;
  c.target = 500;
  c.seed = 9;
  const auto s = rds_capture(g, c);
  std::map<VertexId, int> recruits;
  for (const Edge& e : s.forest.edges) ++recruits[e.u];
  for (auto [u, k] : recruits) CHECK(k <= 2);
  CHECK(s.size() >= 500);
  CHECK(s.size() <= 501);
}

TEST_CASE("random RDS samples satisfy forest invariants") {
  for (auto family : {Family::ConfigLognormal, Family::BarabasiAlbert, Family::ErdosRenyi}) {
    Rng rng(derive_seed(4, {static_cast<std::uint64_t>(family)}));
    const auto g = generate({family, 3.0, 2000}, rng);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      RdsConfig c;
      c.target = 300;
      c.seed = seed;
      check_forest(g, rds_capture(g, c));
    }
  }
}

TEST_CASE("RDS is deterministic under a fixed seed") {
  Rng rng(6);
  const auto g = generate({Family::ConfigExponential, 5.0, 3000}, rng);
  RdsConfig c;
  c.seed = 77;
  const auto a = rds_capture(g, c);
  const auto b = rds_capture(g, c);
  CHECK(a.order == b.order);
  CHECK(a.forest.edges == b.forest.edges);
}

TEST_CASE("harmonic mean of RDS samples tracks the population mean degree") {
  Rng rng(7);
  const auto g = generate({Family::ConfigPoisson, 10.0, 10000}, rng);
  const double population_mean = 2.0 * static_cast<double>(g.num_edges()) / 10000.0;
  std::vector<double> harmonic;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RdsConfig c;
    c.target = 500;
    c.seed = seed;
    const auto s = rds_capture(g, c);
    harmonic.push_back(harmonic_mean_degree(g, s.order));
  }
  std::nth_element(harmonic.begin(), harmonic.begin() + 50, harmonic.end());
  CHECK(harmonic[50] == doctest::Approx(population_mean).epsilon(0.10));
}

TEST_CASE("RDS rejects impossible requests") {
  const MultiGraph g(5);
  RdsConfig c;
  c.target = 6;
  CHECK_THROWS_AS(rds_capture(g, c), std::invalid_argument);
  c.target = 3;
  c.num_seeds = 4;
  CHECK_THROWS_AS(rds_capture(g, c), std::invalid_argument);
}
