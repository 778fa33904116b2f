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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netsize/graph.hpp"
#include "netsize/random.hpp"

namespace netsize {

enum class DegreeKind { Lognormal, Poisson, Exponential, Explicit };

/// Degree law 1 + X with E[1 + X] = lambda for the parametric kinds.
///
/// Lognormal: X has mean lambda - 1 and standard deviation 1.
/// Poisson: X ~ Poisson(lambda - 1).
/// Exponential: X has mean lambda - 1.
/// Explicit: the degrees are taken verbatim from `explicit_degrees`.
struct DegreeDistribution {
  DegreeKind kind = DegreeKind::Poisson;
  double lambda = 1.0;
  std::vector<std::size_t> explicit_degrees;
};

enum class Family { ConfigLognormal, ConfigPoisson, ConfigExponential, BarabasiAlbert, ErdosRenyi };

struct GraphFamily {
  Family family = Family::ConfigPoisson;
  double lambda = 1.0;
  std::size_t n = 2;
};

/// Short names: lognormal, poisson, exponential, ba, er.
std::string_view family_name(Family family);
/// Accepts the short names plus the single letters L, P, X, B, E.
std::optional<Family> parse_family(std::string_view name);

/// n degrees, each >= 1. Continuous draws are rounded half-up.
/// Throws std::invalid_argument when lambda < 1 or n == 0.
std::vector<std::size_t> sample_degrees(const DegreeDistribution& dist, std::size_t n,
                                        Rng& rng);

/// Uniform random pairing of half-edges. An odd stub total is fixed by adding
/// one stub to a uniformly chosen vertex. Loops and parallel edges are kept.
MultiGraph configuration_graph(std::vector<std::size_t> degrees, Rng& rng);

/// Preferential attachment with weights 1 + degree, starting from the
/// complete graph on ceil(lambda) vertices. Each newcomer attaches to
/// floor(lambda/2) or floor(lambda/2)+1 distinct earlier vertices so that the
/// mean degree tends to lambda. Requires n > lambda >= 2.
MultiGraph barabasi_albert(double lambda, std::size_t n, Rng& rng);

/// G(n, p) with p = lambda / (n - 1). Requires 0 <= lambda <= n - 1.
MultiGraph erdos_renyi(double lambda, std::size_t n, Rng& rng);

/// Draws one graph from the family.
MultiGraph generate(const GraphFamily& family, Rng& rng);

struct ClusteredGraph {
  MultiGraph graph;
  double average_clustering = 0.0;
};

/// Degree-preserving rewiring that closes triangles. The input is first
/// reduced to a simple graph (loops and parallel copies dropped). Each
/// proposal picks a vertex u with two non-adjacent neighbours v, w and swaps
/// edges (v,x), (w,y) for (v,w), (x,y); it is kept only if the average local
/// clustering rises. Stops at `target` or after `max_attempts` proposals.
ClusteredGraph rewire_for_clustering(const MultiGraph& g, double target, Rng& rng,
                                     std::size_t max_attempts = 20'000'000);

}  // namespace netsize
