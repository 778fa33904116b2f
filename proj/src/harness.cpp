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

#include "netsize/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <thread>
#include <tuple>

#include <fmt/format.h>

#include "netsize/anonymity.hpp"
#include "netsize/random.hpp"
#include "netsize/sampling.hpp"

namespace netsize {

std::string_view estimator_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::N1: return "n1";
    case EstimatorKind::N2: return "n2";
    case EstimatorKind::N3: return "n3";
    case EstimatorKind::N2Psi: return "n2psi";
    case EstimatorKind::N3Psi: return "n3psi";
  }
  return "unknown";
}

std::optional<EstimatorKind> parse_estimator(std::string_view name) {
  for (auto kind : {EstimatorKind::N1, EstimatorKind::N2, EstimatorKind::N3,
                    EstimatorKind::N2Psi, EstimatorKind::N3Psi}) {
    if (name == estimator_name(kind)) return kind;
  }
  return std::nullopt;
}

bool is_hashed(EstimatorKind kind) {
  return kind == EstimatorKind::N2Psi || kind == EstimatorKind::N3Psi;
}

// ---------------------------------------------------------------------------
// Plans

void ExperimentPlan::validate() const {
  if (families.empty()) throw PlanError("plan: families must not be empty");
  if (lambdas.empty()) throw PlanError("plan: lambdas must not be empty");
  if (sizes.empty()) throw PlanError("plan: sizes must not be empty");
  if (sample_sizes.empty()) throw PlanError("plan: r must not be empty");
  if (estimators.empty()) throw PlanError("plan: estimators must not be empty");
  if (graph_replicates == 0 || sample_replicates == 0) {
    throw PlanError("plan: replicate counts must be at least 1");
  }
  const bool hashed = std::any_of(estimators.begin(), estimators.end(), is_hashed);
  if (hashed && omegas.empty()) throw PlanError("plan: hashed estimators need omegas");
  if (std::find(omegas.begin(), omegas.end(), 0) != omegas.end()) {
    throw PlanError("plan: omegas must be positive");
  }
  if (num_seeds == 0) throw PlanError("plan: num_seeds must be at least 1");
  const bool cross_seed = std::any_of(estimators.begin(), estimators.end(), [](auto k) {
    return k == EstimatorKind::N3 || k == EstimatorKind::N3Psi;
  });
  if (cross_seed && num_seeds < 2) throw PlanError("plan: n3 estimators need num_seeds >= 2");
  const std::size_t smallest_n = *std::min_element(sizes.begin(), sizes.end());
  const std::size_t largest_r = *std::max_element(sample_sizes.begin(), sample_sizes.end());
  if (smallest_n < 2) throw PlanError("plan: sizes must be at least 2");
  if (largest_r > smallest_n) throw PlanError("plan: every r must be <= every n");
  if (std::find(sample_sizes.begin(), sample_sizes.end(), 0) != sample_sizes.end()) {
    throw PlanError("plan: r must be positive");
  }
  if (num_seeds > *std::min_element(sample_sizes.begin(), sample_sizes.end())) {
    throw PlanError("plan: num_seeds must not exceed r");
  }
}

std::size_t ExperimentPlan::raw_row_count() const {
  std::size_t per_sample = 0;
  for (auto k : estimators) per_sample += is_hashed(k) ? omegas.size() : 1;
  return families.size() * lambdas.size() * sizes.size() * sample_sizes.size() *
         graph_replicates * sample_replicates * per_sample;
}

std::size_t ExperimentPlan::sampling_run_count() const {
  const bool uniform = std::find(estimators.begin(), estimators.end(), EstimatorKind::N1) !=
                       estimators.end();
  const bool rds = std::any_of(estimators.begin(), estimators.end(),
                               [](auto k) { return k != EstimatorKind::N1; });
  const std::size_t modes = static_cast<std::size_t>(uniform) + static_cast<std::size_t>(rds);
  return families.size() * lambdas.size() * sizes.size() * sample_sizes.size() *
         graph_replicates * sample_replicates * modes;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view token) {
  token = trim(token);
  T value{};
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view key, std::string_view value, std::size_t line,
                          Parse parse) {
  std::vector<T> out;
  for (auto token : split(value, ',')) {
    token = trim(token);
    if (token.empty()) continue;
    auto parsed = parse(token);
    if (!parsed) {
      throw PlanError(fmt::format("plan line {}: bad value '{}' for {}", line, token, key));
    }
    out.push_back(*parsed);
  }
  if (out.empty()) throw PlanError(fmt::format("plan line {}: {} is empty", line, key));
  return out;
}

std::size_t parse_count(std::string_view key, std::string_view value, std::size_t line) {
  auto parsed = parse_number<std::size_t>(value);
  if (!parsed) throw PlanError(fmt::format("plan line {}: bad value for {}", line, key));
  return *parsed;
}

}  // namespace

ExperimentPlan parse_plan(std::istream& in) {
  ExperimentPlan plan;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw PlanError(fmt::format("plan line {}: expected key = value", line_no));
    }
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    if (key == "families") {
      plan.families = parse_list<Family>(key, value, line_no, parse_family);
    } else if (key == "lambdas") {
      plan.lambdas = parse_list<double>(key, value, line_no, parse_number<double>);
    } else if (key == "sizes" || key == "n") {
      plan.sizes = parse_list<std::size_t>(key, value, line_no, parse_number<std::size_t>);
    } else if (key == "r" || key == "sample_sizes") {
      plan.sample_sizes = parse_list<std::size_t>(key, value, line_no, parse_number<std::size_t>);
    } else if (key == "omegas") {
      plan.omegas = parse_list<std::uint64_t>(key, value, line_no, parse_number<std::uint64_t>);
    } else if (key == "estimators") {
      plan.estimators = parse_list<EstimatorKind>(key, value, line_no, parse_estimator);
    } else if (key == "graph_replicates") {
      plan.graph_replicates = parse_count(key, value, line_no);
    } else if (key == "sample_replicates") {
      plan.sample_replicates = parse_count(key, value, line_no);
    } else if (key == "seed") {
      auto parsed = parse_number<std::uint64_t>(value);
      if (!parsed) throw PlanError(fmt::format("plan line {}: bad seed", line_no));
      plan.seed = *parsed;
    } else if (key == "num_seeds") {
      plan.num_seeds = parse_count(key, value, line_no);
    } else {
      throw PlanError(fmt::format("plan line {}: unknown key '{}'", line_no, key));
    }
  }
  plan.validate();
  return plan;
}

ExperimentPlan load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PlanError("cannot open plan file " + path.string());
  return parse_plan(in);
}

// ---------------------------------------------------------------------------
// Summaries

Summary summarize_values(std::span<const double> sorted, std::size_t failures) {
  auto median_of = [](std::span<const double> v) {
    const std::size_t m = v.size();
    return m % 2 == 1 ? v[m / 2] : (v[m / 2 - 1] + v[m / 2]) / 2.0;
  };
  Summary s;
  s.count = sorted.size() + failures;
  s.failure_rate = s.count == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(s.count);
  if (sorted.empty()) return s;
  const std::size_t m = sorted.size();
  s.median = median_of(sorted);
  s.min = sorted.front();
  s.max = sorted.back();
  if (m == 1) {
    s.q1 = s.q3 = sorted.front();
  } else {
    s.q1 = median_of(sorted.subspan(0, m / 2));
    s.q3 = median_of(sorted.subspan(m - m / 2));
  }
  return s;
}

Summary summarize(std::span<const EstimateResult> estimates) {
  if (estimates.empty()) throw std::invalid_argument("summarize: no estimates");
  std::vector<double> values;
  std::size_t failures = 0;
  for (const auto& e : estimates) {
    if (e.failed()) {
      ++failures;
    } else {
      values.push_back(e.value());
    }
  }
  std::sort(values.begin(), values.end());
  return summarize_values(values, failures);
}

namespace {

using CellKey = std::tuple<Family, double, std::size_t, std::size_t, std::optional<std::uint64_t>,
                           EstimatorKind>;

CellKey cell_of(const RawRow& row) {
  return {row.family, row.lambda, row.n, row.r, row.omega, row.estimator};
}

}  // namespace

std::vector<SummaryRow> summarize_rows(std::span<const RawRow> rows) {
  std::map<CellKey, std::size_t> index;
  std::vector<SummaryRow> out;
  std::vector<std::vector<EstimateResult>> groups;
  for (const auto& row : rows) {
    auto [it, fresh] = index.emplace(cell_of(row), out.size());
    if (fresh) {
      out.push_back({row.family, row.lambda, row.n, row.r, row.omega, row.estimator, {}});
      groups.emplace_back();
    }
    groups[it->second].push_back(row.result);
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].summary = summarize(groups[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Execution

namespace {

enum StreamTag : std::uint64_t { kGraphStream = 1, kUniformStream, kRdsStream, kHashStream };

struct WorkUnit {
  std::size_t family_idx, lambda_idx, size_idx, graph_idx;
};

struct OrderedRow {
  std::array<std::size_t, 8> key;
  RawRow row;
};

std::uint64_t lambda_bits(double lambda) { return std::bit_cast<std::uint64_t>(lambda); }

std::vector<OrderedRow> run_unit(const ExperimentPlan& plan, const WorkUnit& unit) {
  const Family family = plan.families[unit.family_idx];
  const double lambda = plan.lambdas[unit.lambda_idx];
  const std::size_t n = plan.sizes[unit.size_idx];
  const auto fam = static_cast<std::uint64_t>(family);

  Rng graph_rng = make_rng(
      derive_seed(plan.seed, {kGraphStream, fam, lambda_bits(lambda), n, unit.graph_idx}));
  const MultiGraph g = generate({family, lambda, n}, graph_rng);

  const bool wants_uniform = std::find(plan.estimators.begin(), plan.estimators.end(),
                                       EstimatorKind::N1) != plan.estimators.end();
  const bool wants_rds = std::any_of(plan.estimators.begin(), plan.estimators.end(),
                                     [](auto k) { return k != EstimatorKind::N1; });

  std::vector<OrderedRow> rows;
  for (std::size_t r_idx = 0; r_idx < plan.sample_sizes.size(); ++r_idx) {
    const std::size_t r = plan.sample_sizes[r_idx];
    for (std::size_t s = 0; s < plan.sample_replicates; ++s) {
      auto emit = [&](std::size_t est_idx, std::size_t omega_idx,
                      std::optional<std::uint64_t> omega, EstimateResult result) {
        OrderedRow out{{unit.family_idx, unit.lambda_idx, unit.size_idx, r_idx, est_idx,
                        omega_idx, unit.graph_idx, s},
                       {family, lambda, n, r, omega, plan.estimators[est_idx], unit.graph_idx, s,
                        result}};
        rows.push_back(std::move(out));
      };

      std::optional<RdsSample> uniform;
      if (wants_uniform) {
        Rng rng = make_rng(derive_seed(
            plan.seed, {kUniformStream, fam, lambda_bits(lambda), n, unit.graph_idx, r, s}));
        const auto picked = uniform_sample(g, r, rng);
        uniform = observe_uniform(g, picked);
      }
      std::optional<RdsSample> rds;
      if (wants_rds) {
        RdsConfig config;
        config.num_seeds = plan.num_seeds;
        config.target = r;
        config.seed = derive_seed(plan.seed,
                                  {kRdsStream, fam, lambda_bits(lambda), n, unit.graph_idx, r, s});
        rds = rds_capture(g, config);
      }
      std::vector<std::optional<HashedSample>> hashed(plan.omegas.size());

      for (std::size_t e = 0; e < plan.estimators.size(); ++e) {
        const EstimatorKind kind = plan.estimators[e];
        switch (kind) {
          case EstimatorKind::N1: emit(e, 0, std::nullopt, estimate_n1(*uniform)); break;
          case EstimatorKind::N2: emit(e, 0, std::nullopt, estimate_n2(*rds)); break;
          case EstimatorKind::N3: emit(e, 0, std::nullopt, estimate_n3(*rds)); break;
          case EstimatorKind::N2Psi:
          case EstimatorKind::N3Psi:
            for (std::size_t o = 0; o < plan.omegas.size(); ++o) {
              const std::uint64_t omega = plan.omegas[o];
              if (!hashed[o]) {
                Rng rng = make_rng(derive_seed(plan.seed, {kHashStream, fam, lambda_bits(lambda),
                                                           n, unit.graph_idx, r, s, omega}));
                const auto codes = assign_hashes(n, HashSpace::random_function(omega), rng);
                hashed[o] = hashed_view(*rds, codes);
              }
              const auto omega_d = static_cast<double>(omega);
              emit(e, o, omega,
                   kind == EstimatorKind::N2Psi ? estimate_n2_psi(*hashed[o], omega_d)
                                                : estimate_n3_psi(*hashed[o], omega_d));
            }
            break;
        }
      }
    }
  }
  return rows;
}

}  // namespace

ResultTable run_plan(const ExperimentPlan& plan, std::size_t threads) {
  plan.validate();
  std::vector<WorkUnit> units;
  for (std::size_t f = 0; f < plan.families.size(); ++f) {
    for (std::size_t l = 0; l < plan.lambdas.size(); ++l) {
      for (std::size_t z = 0; z < plan.sizes.size(); ++z) {
        for (std::size_t g = 0; g < plan.graph_replicates; ++g) units.push_back({f, l, z, g});
      }
    }
  }

  std::vector<std::vector<OrderedRow>> results(units.size());
  std::vector<std::exception_ptr> errors(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < units.size(); i = next++) {
      try {
        results[i] = run_unit(plan, units[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(units.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  std::vector<OrderedRow> all;
  all.reserve(plan.raw_row_count());
  for (auto& chunk : results) {
    for (auto& row : chunk) all.push_back(std::move(row));
  }
  std::sort(all.begin(), all.end(),
            [](const OrderedRow& a, const OrderedRow& b) { return a.key < b.key; });

  ResultTable table;
  table.raw.reserve(all.size());
  for (auto& row : all) table.raw.push_back(std::move(row.row));
  table.summary = summarize_rows(table.raw);
  return table;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::string optional_number(const std::optional<double>& v) {
  return v ? fmt::format("{}", *v) : std::string();
}

}  // namespace

void write_raw_csv(std::ostream& out, std::span<const RawRow> rows) {
  out << "family,lambda,n,r,omega,estimator,graph_idx,sample_idx,estimate,failed,failure_cause\n";
  for (const auto& row : rows) {
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", family_name(row.family), row.lambda,
                       row.n, row.r, row.omega ? fmt::format("{}", *row.omega) : std::string(),
                       estimator_name(row.estimator), row.graph_idx, row.sample_idx,
                       optional_number(row.result.maybe_value()), row.result.failed() ? 1 : 0,
                       row.result.failure_cause() ? failure_name(*row.result.failure_cause())
                                                  : std::string_view());
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "family,lambda,n,r,omega,estimator,count,median,q1,q3,min,max,failure_rate\n";
  for (const auto& row : rows) {
    const Summary& s = row.summary;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", family_name(row.family),
                       row.lambda, row.n, row.r,
                       row.omega ? fmt::format("{}", *row.omega) : std::string(),
                       estimator_name(row.estimator), s.count, optional_number(s.median),
                       optional_number(s.q1), optional_number(s.q3), optional_number(s.min),
                       optional_number(s.max), s.failure_rate);
  }
}

std::vector<RawRow> read_raw_csv(std::istream& in) {
  std::vector<RawRow> rows;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](std::string_view what) {
    throw PlanError(fmt::format("raw csv line {}: {}", line_no, what));
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 || trim(line).empty()) continue;
    const auto f = split(trim(line), ',');
    if (f.size() != 11) fail("expected 11 fields");
    RawRow row;
    auto family = parse_family(f[0]);
    auto lambda = parse_number<double>(f[1]);
    auto n = parse_number<std::size_t>(f[2]);
    auto r = parse_number<std::size_t>(f[3]);
    auto estimator = parse_estimator(f[5]);
    auto graph_idx = parse_number<std::size_t>(f[6]);
    auto sample_idx = parse_number<std::size_t>(f[7]);
    if (!family || !lambda || !n || !r || !estimator || !graph_idx || !sample_idx) {
      fail("malformed cell coordinates");
    }
    row.family = *family;
    row.lambda = *lambda;
    row.n = *n;
    row.r = *r;
    if (!f[4].empty()) {
      auto omega = parse_number<std::uint64_t>(f[4]);
      if (!omega) fail("malformed omega");
      row.omega = *omega;
    }
    row.estimator = *estimator;
    row.graph_idx = *graph_idx;
    row.sample_idx = *sample_idx;
    if (f[9] == "1") {
      std::optional<FailureCause> cause;
      for (auto c : {FailureCause::ZeroMatches, FailureCause::ZeroCrossMatches,
                     FailureCause::DegenerateDegrees, FailureCause::NoRoot}) {
        if (f[10] == failure_name(c)) cause = c;
      }
      if (!cause) fail("unknown failure cause");
      row.result = EstimateResult::failure(*cause);
    } else {
      auto value = parse_number<double>(f[8]);
      if (!value) fail("malformed estimate");
      row.result = EstimateResult::success(*value);
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<FailurePoint> failure_curve(std::span<const SummaryRow> rows,
                                        EstimatorKind estimator, std::size_t r) {
  std::map<std::size_t, FailurePoint> by_n;
  for (const auto& row : rows) {
    if (row.estimator != estimator || row.r != r) continue;
    auto& point = by_n[row.n];
    point.n = row.n;
    point.mean_failure_rate += row.summary.failure_rate;
    ++point.cells;
  }
  std::vector<FailurePoint> out;
  for (auto& [n, point] : by_n) {
    point.mean_failure_rate /= static_cast<double>(point.cells);
    out.push_back(point);
  }
  return out;
}

}  // namespace netsize
