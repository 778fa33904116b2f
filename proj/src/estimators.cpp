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

#include "netsize/estimators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace netsize {

std::string_view failure_name(FailureCause cause) {
  switch (cause) {
    case FailureCause::ZeroMatches: return "ZeroMatches";
    case FailureCause::ZeroCrossMatches: return "ZeroCrossMatches";
    case FailureCause::DegenerateDegrees: return "DegenerateDegrees";
    case FailureCause::NoRoot: return "NoRoot";
  }
  return "Unknown";
}

namespace {

struct DegreeStats {
  double mean = 0.0;
  double harmonic = 0.0;
  bool degenerate = false;
};

// d(S) and d~(S) over respondents reporting at least one tie. A respondent
// with no ties has no free ends and can never be matched, so it carries no
// degree information; it still counts toward |S|. Degenerate when nobody
// reports a tie or d(S) <= 1.
DegreeStats degree_stats(std::span<const std::size_t> degrees) {
  DegreeStats stats;
  double sum = 0.0;
  double inverse_sum = 0.0;
  std::size_t connected = 0;
  for (std::size_t d : degrees) {
    if (d == 0) continue;
    ++connected;
    sum += static_cast<double>(d);
    inverse_sum += 1.0 / static_cast<double>(d);
  }
  if (connected == 0) {
    stats.degenerate = true;
    return stats;
  }
  const auto size = static_cast<double>(connected);
  stats.mean = sum / size;
  stats.harmonic = size / inverse_sum;
  stats.degenerate = stats.mean <= 1.0;
  return stats;
}

// Distinct entries of `alters` accepted by `keep`: intersection with a
// multiplicity-one set.
template <typename Keep>
std::size_t distinct_hits(const std::vector<VertexId>& alters, Keep keep) {
  std::vector<VertexId> sorted = alters;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return static_cast<std::size_t>(std::count_if(sorted.begin(), sorted.end(), keep));
}

struct FreeEndCounts {
  std::size_t free_ends = 0;
  std::size_t matches = 0;
};

FreeEndCounts count_free_ends(const RdsSample& sample) {
  const std::unordered_set<VertexId> members(sample.order.begin(), sample.order.end());
  FreeEndCounts counts;
  for (const auto& alters : sample.alters) {
    counts.free_ends += alters.size();
    counts.matches += distinct_hits(alters, [&](VertexId v) { return members.contains(v); });
  }
  return counts;
}

}  // namespace

EstimateResult estimate_n1(const MultiGraph& g, std::span<const VertexId> sample) {
  if (sample.empty()) throw std::invalid_argument("estimate_n1: empty sample");
  return estimate_n1(observe_uniform(g, sample));
}

EstimateResult estimate_n1(const RdsSample& sample) {
  if (sample.order.empty()) throw std::invalid_argument("estimate_n1: empty sample");
  const FreeEndCounts counts = count_free_ends(sample);
  if (counts.matches == 0) return EstimateResult::failure(FailureCause::ZeroMatches);
  return EstimateResult::success(static_cast<double>(sample.size()) *
                                 static_cast<double>(counts.free_ends) /
                                 static_cast<double>(counts.matches));
}

EstimateResult estimate_n2(const RdsSample& sample) {
  const DegreeStats stats = degree_stats(sample.degrees);
  if (stats.degenerate) return EstimateResult::failure(FailureCause::DegenerateDegrees);
  const FreeEndCounts counts = count_free_ends(sample);
  if (counts.matches == 0) return EstimateResult::failure(FailureCause::ZeroMatches);
  const double prefactor = (stats.mean - 1.0) / stats.harmonic;
  return EstimateResult::success(prefactor * static_cast<double>(sample.size()) *
                                 static_cast<double>(counts.free_ends) /
                                 static_cast<double>(counts.matches));
}

EstimateResult estimate_n3(const RdsSample& sample) {
  const auto& seeds = sample.forest.seeds;
  if (seeds.size() < 2) {
    throw std::invalid_argument("estimate_n3: needs at least two seeds");
  }
  const DegreeStats stats = degree_stats(sample.degrees);
  if (stats.degenerate) return EstimateResult::failure(FailureCause::DegenerateDegrees);

  struct Tree {
    std::size_t size = 0;
    std::size_t connected = 0;
    double degree_sum = 0.0;
    std::size_t free_ends = 0;
    std::size_t cross_matches = 0;
  };
  std::map<VertexId, Tree> trees;
  for (VertexId s : seeds) trees[s];

  const auto& seed_of = sample.forest.seed_of;
  double total_degree = 0.0;
  std::size_t total_connected = 0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const VertexId u = sample.order[i];
    const VertexId own = seed_of.at(u);
    Tree& tree = trees.at(own);
    ++tree.size;
    if (sample.degrees[i] > 0) {
      ++tree.connected;
      ++total_connected;
    }
    tree.degree_sum += static_cast<double>(sample.degrees[i]);
    total_degree += static_cast<double>(sample.degrees[i]);
    tree.free_ends += sample.alters[i].size();
    tree.cross_matches += distinct_hits(sample.alters[i], [&](VertexId v) {
      auto it = seed_of.find(v);
      return it != seed_of.end() && it->second != own;
    });
  }

  const auto total_size = static_cast<double>(sample.size());
  double numerator = 0.0;
  std::size_t denominator = 0;
  for (const auto& [seed, tree] : trees) {
    const double rest_size = total_size - static_cast<double>(tree.size);
    const std::size_t rest_connected = total_connected - tree.connected;
    // Free ends cannot land on a complement without ties.
    if (rest_connected == 0) continue;
    const double rest_mean =
        (total_degree - tree.degree_sum) / static_cast<double>(rest_connected);
    numerator += (rest_mean - 1.0) / stats.harmonic * rest_size *
                 static_cast<double>(tree.free_ends);
    denominator += tree.cross_matches;
  }
  if (denominator == 0) return EstimateResult::failure(FailureCause::ZeroCrossMatches);
  return EstimateResult::success(numerator / static_cast<double>(denominator));
}

}  // namespace netsize
