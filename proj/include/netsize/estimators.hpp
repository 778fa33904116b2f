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

#include <optional>
#include <span>
#include <string_view>

#include "netsize/graph.hpp"
#include "netsize/sampling.hpp"

namespace netsize {

enum class FailureCause { ZeroMatches, ZeroCrossMatches, DegenerateDegrees, NoRoot };

std::string_view failure_name(FailureCause cause);

/// Either a finite positive population estimate or the reason there is none.
class EstimateResult {
 public:
  static EstimateResult success(double value) { return EstimateResult(value, std::nullopt); }
  static EstimateResult failure(FailureCause cause) {
    return EstimateResult(std::nullopt, cause);
  }

  bool failed() const { return cause_.has_value(); }
  /// Throws std::bad_optional_access on a failed result.
  double value() const { return value_.value(); }
  const std::optional<double>& maybe_value() const { return value_; }
  const std::optional<FailureCause>& failure_cause() const { return cause_; }

 private:
  EstimateResult(std::optional<double> value, std::optional<FailureCause> cause)
      : value_(value), cause_(cause) {}

  std::optional<double> value_;
  std::optional<FailureCause> cause_;
};

/// |T| * <R(T,∅)> / <M(T,∅)> over a uniform vertex sample T.
/// Throws std::invalid_argument for an empty T.
EstimateResult estimate_n1(const MultiGraph& g, std::span<const VertexId> sample);

/// Same estimator over recorded data. Every recorded alter is treated as a
/// free end, so this is meant for samples without referral edges.
EstimateResult estimate_n1(const RdsSample& sample);

/// [(d(S) - 1) / d~(S)] * |S| * <R(S,F)> / <M(S,F)>.
///
/// d(S) and d~(S) are taken over respondents reporting at least one tie;
/// DegenerateDegrees when there are none or d(S) <= 1.
EstimateResult estimate_n2(const RdsSample& sample);

/// Cross-seed estimator: within-tree matches are discarded and each tree is
/// scored against the rest of the sample. Throws std::invalid_argument when
/// the sample has fewer than two seeds.
EstimateResult estimate_n3(const RdsSample& sample);

}  // namespace netsize
