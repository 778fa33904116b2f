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
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "netsize/generators.hpp"
#include "netsize/io.hpp"

using namespace netsize;

namespace {

double mean_degree_of(const MultiGraph& g) {
  return 2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices());
}

std::vector<std::size_t> degrees_of(const MultiGraph& g) {
  std::vector<std::size_t> d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
  return d;
}

bool is_simple(const MultiGraph& g) {
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

std::vector<Edge> canonical(const MultiGraph& g) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) out.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("degree sampling") {
  Rng rng(1);
  const auto ones = sample_degrees({DegreeKind::Poisson, 1.0, {}}, 1000, rng);
  CHECK(std::all_of(ones.begin(), ones.end(), [](std::size_t d) { return d == 1; }));

  const auto poisson = sample_degrees({DegreeKind::Poisson, 3.0, {}}, 100000, rng);
  double sum = 0;
  for (auto d : poisson) sum += static_cast<double>(d);
  CHECK(sum / 1e5 == doctest::Approx(3.0).epsilon(0.05 / 3.0));

  const auto passthrough = sample_degrees({DegreeKind::Explicit, 0.0, {2, 2, 2}}, 3, rng);
  CHECK(passthrough == std::vector<std::size_t>{2, 2, 2});

  for (auto kind : {DegreeKind::Lognormal, DegreeKind::Poisson, DegreeKind::Exponential}) {
    for (double lambda : {3.0, 5.0, 10.0}) {
      const auto d = sample_degrees({kind, lambda, {}}, 100000, rng);
      CHECK(*std::min_element(d.begin(), d.end()) >= 1);
      double s = 0;
      for (auto x : d) s += static_cast<double>(x);
      CHECK(s / 1e5 == doctest::Approx(lambda).epsilon(0.05));
    }
  }
}

TEST_CASE("forced configuration pairings") {
  Rng rng(2);
  const auto one = configuration_graph({1, 1}, rng);
  CHECK(canonical(one) == std::vector<Edge>{{0, 1}});
  const auto loop = configuration_graph({2}, rng);
  CHECK(canonical(loop) == std::vector<Edge>{{0, 0}});
  CHECK(loop.degree(0) == 2);
}

TEST_CASE("configuration graph on [2,2,2] matches the exhaustive pairing distribution") {
  // Enumerate all 15 perfect matchings of the six stubs 0..5 (stub i belongs
  // to vertex i / 2) and count how often each multigraph arises.
  std::map<std::vector<Edge>, int> expected;
  std::vector<int> stubs{0, 1, 2, 3, 4, 5};
  std::function<void(std::vector<int>, std::vector<Edge>)> pair_up =
      [&](std::vector<int> rest, std::vector<Edge> edges) {
        if (rest.empty()) {
          std::sort(edges.begin(), edges.end());
          ++expected[edges];
          return;
        }
        for (std::size_t j = 1; j < rest.size(); ++j) {
          const auto a = static_cast<VertexId>(rest[0] / 2);
          const auto b = static_cast<VertexId>(rest[j] / 2);
          std::vector<int> next;
          for (std::size_t k = 1; k < rest.size(); ++k) {
            if (k != j) next.push_back(rest[k]);
          }
          auto e2 = edges;
          e2.push_back({std::min(a, b), std::max(a, b)});
          pair_up(next, e2);
        }
      };
  pair_up(stubs, {});
  int total = 0;
  for (const auto& [edges, count] : expected) {
    total += count;
    std::vector<std::size_t> d(3, 0);
    for (const Edge& e : edges) {
      ++d[e.u];
      ++d[e.v];
    }
    CHECK(d == std::vector<std::size_t>{2, 2, 2});
  }
  CHECK(total == 15);

  Rng rng(3);
  std::map<std::vector<Edge>, int> observed;
  const int draws = 30000;
  for (int i = 0; i < draws; ++i) {
    const auto g = configuration_graph({2, 2, 2}, rng);
    CHECK(degrees_of(g) == std::vector<std::size_t>{2, 2, 2});
    ++observed[canonical(g)];
  }
  for (const auto& [edges, count] : observed) REQUIRE(expected.contains(edges));
  for (const auto& [edges, count] : expected) {
    const double p = count / 15.0;
    const double sd = std::sqrt(p * (1 - p) / draws);
    CHECK(std::abs(observed[edges] / static_cast<double>(draws) - p) < 5 * sd);
  }
}

TEST_CASE("configuration graph preserves degrees and fixes odd totals") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = sample_degrees({DegreeKind::Exponential, 4.0, {}}, 300, rng);
    std::size_t total = 0;
    for (auto x : d) total += x;
    const auto g = configuration_graph(d, rng);
    const auto got = degrees_of(g);
    if (total % 2 == 0) {
      CHECK(got == d);
    } else {
      std::size_t diffs = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK((got[i] == d[i] || got[i] == d[i] + 1));
        diffs += got[i] != d[i];
      }
      CHECK(diffs == 1);
    }
  }
}

TEST_CASE("Barabasi-Albert") {
  Rng rng(5);
  const auto g = barabasi_albert(4.0, 10000, rng);
  CHECK(g.num_vertices() == 10000);
  CHECK(mean_degree_of(g) == doctest::Approx(4.0).epsilon(0.1 / 4.0));
  CHECK(is_simple(g));
  for (int trial = 0; trial < 200; ++trial) {
    const auto small = barabasi_albert(2.0, 3, rng);
    CHECK(is_simple(small));
    CHECK(small.degree(2) >= 1);
    CHECK(small.degree(2) <= 2);
  }
  const auto odd = barabasi_albert(5.0, 5000, rng);
  CHECK(is_simple(odd));
  CHECK(mean_degree_of(odd) == doctest::Approx(5.0).epsilon(0.05));
}

TEST_CASE("Erdos-Renyi") {
  Rng rng(6);
  CHECK(erdos_renyi(0.0, 100, rng).num_edges() == 0);
  const auto complete = erdos_renyi(19.0, 20, rng);
  CHECK(complete.num_edges() == 190);
  CHECK(is_simple(complete));
  double mean = 0;
  for (int i = 0; i < 30; ++i) {
    const auto g = erdos_renyi(10.0, 5000, rng);
    CHECK(is_simple(g));
    mean += mean_degree_of(g) / 30.0;
  }
  CHECK(mean == doctest::Approx(10.0).epsilon(0.2 / 10.0));
}

TEST_CASE("every family hits its mean degree") {
  for (auto family : {Family::ConfigLognormal, Family::ConfigPoisson, Family::ConfigExponential,
                      Family::BarabasiAlbert, Family::ErdosRenyi}) {
    for (double lambda : {3.0, 5.0, 10.0}) {
      Rng rng(derive_seed(7, {static_cast<std::uint64_t>(family), static_cast<std::uint64_t>(lambda)}));
      double mean = 0;
      for (int i = 0; i < 30; ++i) mean += mean_degree_of(generate({family, lambda, 5000}, rng)) / 30;
      INFO(family_name(family), " lambda=", lambda);
      CHECK(mean == doctest::Approx(lambda).epsilon(0.05));
    }
  }
}

TEST_CASE("family names round-trip") {
  for (auto family : {Family::ConfigLognormal, Family::ConfigPoisson, Family::ConfigExponential,
                      Family::BarabasiAlbert, Family::ErdosRenyi}) {
    CHECK(parse_family(family_name(family)) == family);
  }
  CHECK(parse_family("L") == Family::ConfigLognormal);
  CHECK_FALSE(parse_family("ring").has_value());
}

TEST_CASE("generation is deterministic") {
  for (auto family : {Family::ConfigLognormal, Family::BarabasiAlbert, Family::ErdosRenyi}) {
    Rng a(11);
    Rng b(11);
    CHECK(generate({family, 5.0, 2000}, a).edges() == generate({family, 5.0, 2000}, b).edges());
  }
}

TEST_CASE("clustering rewiring preserves degrees and reaches the target") {
  Rng rng(12);
  const auto g = generate({Family::ConfigPoisson, 6.0, 2000}, rng);
  const auto rewired = rewire_for_clustering(g, 0.15, rng);
  CHECK(rewired.average_clustering >= 0.15);
  CHECK(is_simple(rewired.graph));
  const auto stats = clustering_stats(rewired.graph);
  CHECK(stats.average_clustering == doctest::Approx(rewired.average_clustering).epsilon(1e-9));
  // Degrees match the simple projection of the input.
  MultiGraph simple(g.num_vertices());
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u != e.v && seen.insert(std::minmax(e.u, e.v)).second) simple.add_edge(e.u, e.v);
  }
  CHECK(degrees_of(rewired.graph) == degrees_of(simple));
}
