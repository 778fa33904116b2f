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
#include <optional>
#include <utility>
#include <vector>

#include "netsize/graph.hpp"
#include "netsize/random.hpp"

namespace netsize {

/// Distribution over how many coupons a respondent redeems, before capping at
/// the number of undiscovered neighbours. Stored as (count, weight) pairs.
struct RecruitLaw {
  std::vector<std::pair<std::size_t, double>> outcomes{{2, 0.9}, {1, 0.1}};

  /// Every respondent recruits as many undiscovered neighbours as allowed by
  /// `cap` (cap = max possible degree means "everyone").
  static RecruitLaw always(std::size_t count) { return RecruitLaw{{{count, 1.0}}}; }
};

struct RdsConfig {
  std::size_t num_seeds = 7;
  std::size_t target = 500;
  RecruitLaw recruit_law;
  std::uint64_t seed = 0;
  /// Fixed initial seeds (tests); drawn uniformly when empty.
  std::vector<VertexId> initial_seeds;
};

/// A respondent-driven sample as seen by the researcher.
///
/// `order` lists respondents in discovery order. `degrees[i]` and
/// `alters[i]` belong to `order[i]`: the reported degree and the free
/// neighbourhood N(u,F) (one entry per non-referral tie, so parallel ties
/// repeat). Estimators only ever read this structure, never the graph.
struct RdsSample {
  std::vector<VertexId> order;
  ReferralForest forest;
  std::vector<std::size_t> degrees;
  std::vector<std::vector<VertexId>> alters;

  std::size_t size() const { return order.size(); }
  /// Recruiter of order[i], empty for seeds.
  std::optional<VertexId> recruiter_of(VertexId v) const;
};

/// Uniform random r-subset of the vertices, in draw order.
/// Throws std::invalid_argument when r > n.
std::vector<VertexId> uniform_sample(const MultiGraph& g, std::size_t r, Rng& rng);

/// Records degrees and free neighbourhoods for the given discovery order and
/// forest.
RdsSample observe(const MultiGraph& g, std::vector<VertexId> order, ReferralForest forest);

/// Wraps a uniform sample as a forest of singleton trees (F empty), which is
/// the view the n1 estimator needs.
RdsSample observe_uniform(const MultiGraph& g, std::span<const VertexId> sample);

/// Simulates referral recruitment.
///
/// Seeds are drawn uniformly without replacement. At each step a uniformly
/// chosen frontier member leaves the frontier and recruits k ~ recruit_law
/// distinct undiscovered neighbours (k capped at how many exist); recruits
/// join the frontier. A fresh uniform seed from V \ S is added whenever the
/// frontier empties before the target is met. Stops once |S| >= target, so the
/// last step may overshoot by up to max(k) - 1.
/// Throws std::invalid_argument when target > n or the seed count is not in
/// [1, target].
RdsSample rds_capture(const MultiGraph& g, const RdsConfig& config);

}  // namespace netsize
