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
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "netsize/multiset.hpp"

namespace netsize {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..n-1. Parallel edges and self-loops
/// are allowed; a loop puts its vertex into its own neighbour list twice, so
/// the handshake identity sum(degree) == 2 * num_edges always holds.
class MultiGraph {
 public:
  MultiGraph() = default;
  explicit MultiGraph(std::size_t num_vertices);
  MultiGraph(std::size_t num_vertices, std::span<const Edge> edges);

  /// Construction-time only. Throws std::out_of_range on a bad endpoint.
  void add_edge(VertexId u, VertexId v);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbour occurrences of v, in insertion order.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Referral trees of a respondent-driven sample.
///
/// `edges` holds (recruiter, recruit) pairs, `seeds` the roots in discovery
/// order, and `seed_of` maps every sampled vertex to the seed whose tree it
/// belongs to (seeds map to themselves). The key set of `seed_of` is the
/// sample S.
struct ReferralForest {
  std::vector<Edge> edges;
  std::vector<VertexId> seeds;
  std::map<VertexId, VertexId> seed_of;

  std::size_t sample_size() const { return seed_of.size(); }
  bool is_seed(VertexId v) const;
  /// C(s): members of the tree rooted at seed s, ascending.
  std::vector<VertexId> component(VertexId seed) const;
  /// S \ C(s), ascending.
  std::vector<VertexId> complement(VertexId seed) const;
  /// Sampled vertices, ascending.
  std::vector<VertexId> members() const;
};

std::size_t degree(const MultiGraph& g, VertexId v);

/// Arithmetic mean degree of A. Throws std::invalid_argument if A is empty.
double mean_degree(const MultiGraph& g, std::span<const VertexId> vertices);

/// |A| / sum 1/d(v). Throws std::invalid_argument if A is empty or holds a
/// vertex of degree zero.
double harmonic_mean_degree(const MultiGraph& g,
                            std::span<const VertexId> vertices);

/// N(u,F): neighbour occurrences of u with one occurrence removed per forest
/// edge incident to u. Throws std::invalid_argument if an incident forest edge
/// is not present in g.
Multiset<VertexId> free_neighborhood(const MultiGraph& g, VertexId u,
                                     std::span<const Edge> forest_edges);

/// R(S,F): disjoint union of N(u,F) over u in S.
Multiset<VertexId> free_ends(const MultiGraph& g, std::span<const VertexId> sample,
                             std::span<const Edge> forest_edges);

/// M(S,F): disjoint union of N(u,F) ∩ S, S taken with multiplicity one.
Multiset<VertexId> matches(const MultiGraph& g, std::span<const VertexId> sample,
                           std::span<const Edge> forest_edges);

/// X(s,F,γ): free neighbours of C(s) that land in S \ C(s).
/// Throws std::invalid_argument if s is not a seed of the forest.
Multiset<VertexId> cross_seed_matches(const MultiGraph& g,
                                      const ReferralForest& forest,
                                      VertexId seed);

}  // namespace netsize
