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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "netsize/estimators.hpp"
#include "netsize/generators.hpp"

namespace netsize {

enum class EstimatorKind { N1, N2, N3, N2Psi, N3Psi };

std::string_view estimator_name(EstimatorKind kind);
std::optional<EstimatorKind> parse_estimator(std::string_view name);
bool is_hashed(EstimatorKind kind);

class PlanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A grid of Monte-Carlo runs.
///
/// For every (family, lambda, n) cell, graph_replicates graphs are drawn. On
/// each graph and for each r, sample_replicates samples are taken: uniform
/// ones for n1 and respondent-driven ones for the other estimators, which all
/// share the same sample. Hashed estimators run once per omega.
struct ExperimentPlan {
  std::vector<Family> families;
  std::vector<double> lambdas;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> sample_sizes;
  std::vector<std::uint64_t> omegas;
  std::vector<EstimatorKind> estimators;
  std::size_t graph_replicates = 1;
  std::size_t sample_replicates = 1;
  std::uint64_t seed = 0;
  std::size_t num_seeds = 7;

  /// Throws PlanError.
  void validate() const;
  /// Number of raw rows run_plan will emit.
  std::size_t raw_row_count() const;
  /// Number of sampling runs (one per drawn sample, uniform or RDS).
  std::size_t sampling_run_count() const;
};

/// key = value lines; lists are comma separated; '#' starts a comment.
/// Keys: families, lambdas, sizes, r, omegas, estimators, graph_replicates,
/// sample_replicates, seed, num_seeds. Throws PlanError.
ExperimentPlan parse_plan(std::istream& in);
ExperimentPlan load_plan(const std::filesystem::path& path);

struct RawRow {
  Family family = Family::ConfigPoisson;
  double lambda = 0.0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::uint64_t> omega;
  EstimatorKind estimator = EstimatorKind::N1;
  std::size_t graph_idx = 0;
  std::size_t sample_idx = 0;
  EstimateResult result = EstimateResult::failure(FailureCause::ZeroMatches);
};

/// Quartiles are Tukey hinges over the successful estimates; failure_rate is
/// over all runs. Quantiles are absent when every run failed.
struct Summary {
  std::size_t count = 0;
  std::optional<double> median;
  std::optional<double> q1;
  std::optional<double> q3;
  std::optional<double> min;
  std::optional<double> max;
  double failure_rate = 0.0;
};

struct SummaryRow {
  Family family = Family::ConfigPoisson;
  double lambda = 0.0;
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::uint64_t> omega;
  EstimatorKind estimator = EstimatorKind::N1;
  Summary summary;
};

/// Throws std::invalid_argument for an empty list.
Summary summarize(std::span<const EstimateResult> estimates);
/// Median and hinges of already sorted values; requires a non-empty input.
Summary summarize_values(std::span<const double> sorted_values, std::size_t failures);

/// Groups raw rows by (family, lambda, n, r, omega, estimator) in order of
/// first appearance.
std::vector<SummaryRow> summarize_rows(std::span<const RawRow> rows);

struct ResultTable {
  std::vector<RawRow> raw;
  std::vector<SummaryRow> summary;
};

/// Runs the grid on `threads` workers. Every graph, sample and hash
/// assignment draws from a stream derived from the master seed and its own
/// coordinates, so output is identical for any thread count and run order.
ResultTable run_plan(const ExperimentPlan& plan, std::size_t threads = 1);

void write_raw_csv(std::ostream& out, std::span<const RawRow> rows);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
/// Inverse of write_raw_csv. Throws PlanError on malformed input.
std::vector<RawRow> read_raw_csv(std::istream& in);

struct FailurePoint {
  std::size_t n = 0;
  double mean_failure_rate = 0.0;
  std::size_t cells = 0;
};

/// Mean of the per-cell failure rates for one estimator and r, by n,
/// averaged over every family, lambda and omega present.
std::vector<FailurePoint> failure_curve(std::span<const SummaryRow> rows,
                                        EstimatorKind estimator, std::size_t r);

}  // namespace netsize
