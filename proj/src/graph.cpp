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

#include "netsize/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace netsize {

MultiGraph::MultiGraph(std::size_t num_vertices) : adjacency_(num_vertices) {}

MultiGraph::MultiGraph(std::size_t num_vertices, std::span<const Edge> edges)
    : adjacency_(num_vertices) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void MultiGraph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph with " +
                            std::to_string(adjacency_.size()) + " vertices");
  }
}

void MultiGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  edges_.push_back({u, v});
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
}

std::span<const VertexId> MultiGraph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t MultiGraph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

bool ReferralForest::is_seed(VertexId v) const {
  auto it = seed_of.find(v);
  return it != seed_of.end() && it->second == v;
}

std::vector<VertexId> ReferralForest::component(VertexId seed) const {
  std::vector<VertexId> out;
  for (const auto& [v, s] : seed_of) {
    if (s == seed) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ReferralForest::complement(VertexId seed) const {
  std::vector<VertexId> out;
  for (const auto& [v, s] : seed_of) {
    if (s != seed) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ReferralForest::members() const {
  std::vector<VertexId> out;
  out.reserve(seed_of.size());
  for (const auto& entry : seed_of) out.push_back(entry.first);
  return out;
}

std::size_t degree(const MultiGraph& g, VertexId v) { return g.degree(v); }

double mean_degree(const MultiGraph& g, std::span<const VertexId> vertices) {
  if (vertices.empty()) throw std::invalid_argument("mean_degree: empty vertex set");
  double total = 0.0;
  for (VertexId v : vertices) total += static_cast<double>(g.degree(v));
  return total / static_cast<double>(vertices.size());
}

double harmonic_mean_degree(const MultiGraph& g,
                            std::span<const VertexId> vertices) {
  if (vertices.empty()) {
    throw std::invalid_argument("harmonic_mean_degree: empty vertex set");
  }
  double inverse_sum = 0.0;
  for (VertexId v : vertices) {
    const std::size_t d = g.degree(v);
    if (d == 0) {
      throw std::invalid_argument("harmonic_mean_degree: vertex " +
                                  std::to_string(v) + " has degree 0");
    }
    inverse_sum += 1.0 / static_cast<double>(d);
  }
  return static_cast<double>(vertices.size()) / inverse_sum;
}

namespace {

// Other endpoints of the forest edges incident to each vertex.
using Incidence = std::unordered_map<VertexId, std::vector<VertexId>>;

Incidence forest_incidence(std::span<const Edge> forest_edges) {
  Incidence out;
  for (const Edge& e : forest_edges) {
    out[e.u].push_back(e.v);
    out[e.v].push_back(e.u);
  }
  return out;
}

Multiset<VertexId> free_neighborhood_impl(const MultiGraph& g, VertexId u,
                                          const Incidence& incidence) {
  auto free = Multiset<VertexId>::from_range(g.neighbors(u));
  auto it = incidence.find(u);
  if (it == incidence.end()) return free;
  for (VertexId other : it->second) {
    if (free.erase(other) == 0) {
      throw std::invalid_argument("forest edge (" + std::to_string(u) + "," +
                                  std::to_string(other) +
                                  ") is not an edge of the graph");
    }
  }
  return free;
}

}  // namespace

Multiset<VertexId> free_neighborhood(const MultiGraph& g, VertexId u,
                                     std::span<const Edge> forest_edges) {
  return free_neighborhood_impl(g, u, forest_incidence(forest_edges));
}

Multiset<VertexId> free_ends(const MultiGraph& g, std::span<const VertexId> sample,
                             std::span<const Edge> forest_edges) {
  const Incidence incidence = forest_incidence(forest_edges);
  Multiset<VertexId> out;
  for (VertexId u : sample) {
    const auto free = free_neighborhood_impl(g, u, incidence);
    for (const auto& [v, n] : free.counts()) {
      out.insert(v, n);
    }
  }
  return out;
}

Multiset<VertexId> matches(const MultiGraph& g, std::span<const VertexId> sample,
                           std::span<const Edge> forest_edges) {
  const Incidence incidence = forest_incidence(forest_edges);
  const std::unordered_set<VertexId> in_sample(sample.begin(), sample.end());
  Multiset<VertexId> out;
  for (VertexId u : sample) {
    const auto free = free_neighborhood_impl(g, u, incidence);
    for (const auto& [v, n] : free.counts()) {
      if (in_sample.contains(v)) out.insert(v);
    }
  }
  return out;
}

Multiset<VertexId> cross_seed_matches(const MultiGraph& g,
                                      const ReferralForest& forest,
                                      VertexId seed) {
  if (!forest.is_seed(seed)) {
    throw std::invalid_argument("cross_seed_matches: " + std::to_string(seed) +
                                " is not a seed");
  }
  const Incidence incidence = forest_incidence(forest.edges);
  Multiset<VertexId> out;
  for (const auto& [u, s] : forest.seed_of) {
    if (s != seed) continue;
    const auto free = free_neighborhood_impl(g, u, incidence);
    for (const auto& [v, n] : free.counts()) {
      auto it = forest.seed_of.find(v);
      if (it != forest.seed_of.end() && it->second != seed) out.insert(v);
    }
  }
  return out;
}

}  // namespace netsize
