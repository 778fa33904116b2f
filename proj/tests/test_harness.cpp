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

#include <sstream>

#include "netsize/harness.hpp"

using namespace netsize;

namespace {

ExperimentPlan tiny_plan() {
  ExperimentPlan p;
  p.families = {Family::ConfigPoisson, Family::ErdosRenyi};
  p.lambdas = {5.0};
  p.sizes = {600, 900};
  p.sample_sizes = {100, 200};
  p.omegas = {1000, 50000};
  p.estimators = {EstimatorKind::N1, EstimatorKind::N2, EstimatorKind::N3,
                  EstimatorKind::N2Psi, EstimatorKind::N3Psi};
  p.graph_replicates = 2;
  p.sample_replicates = 2;
  p.seed = 17;
  return p;
}

std::pair<std::string, std::string> csvs(const ResultTable& t) {
  std::ostringstream raw;
  std::ostringstream summary;
  write_raw_csv(raw, t.raw);
  write_summary_csv(summary, t.summary);
  return {raw.str(), summary.str()};
}

}  // namespace

TEST_CASE("Tukey hinge summaries") {
  const std::vector<EstimateResult> five{EstimateResult::success(5), EstimateResult::success(1),
                                         EstimateResult::success(3), EstimateResult::success(2),
                                         EstimateResult::success(4)};
  const auto s = summarize(five);
  CHECK(s.median == 3.0);
  CHECK(s.q1 == 1.5);
  CHECK(s.q3 == 4.5);
  CHECK(s.min == 1.0);
  CHECK(s.max == 5.0);
  CHECK(s.failure_rate == 0.0);

  const std::vector<EstimateResult> single{EstimateResult::success(7)};
  const auto one = summarize(single);
  CHECK(one.median == 7.0);
  CHECK(one.q1 == 7.0);
  CHECK(one.q3 == 7.0);

  // Even count: halves include everything.
  const std::vector<double> four{1, 2, 3, 10};
  const auto even = summarize_values(four, 0);
  CHECK(even.median == 2.5);
  CHECK(even.q1 == 1.5);
  CHECK(even.q3 == 6.5);

  std::vector<EstimateResult> mixed;
  for (int i = 0; i < 7; ++i) mixed.push_back(EstimateResult::success(i));
  for (int i = 0; i < 3; ++i) mixed.push_back(EstimateResult::failure(FailureCause::ZeroMatches));
  const auto m = summarize(mixed);
  CHECK(m.failure_rate == doctest::Approx(0.3));
  CHECK(m.count == 10);
  CHECK(m.median == 3.0);
  CHECK(m.q1 == 1.0);
  CHECK(m.q3 == 5.0);

  const std::vector<EstimateResult> dead(4, EstimateResult::failure(FailureCause::NoRoot));
  const auto d = summarize(dead);
  CHECK(d.failure_rate == 1.0);
  CHECK_FALSE(d.median.has_value());
  CHECK_FALSE(d.q1.has_value());
  CHECK_THROWS_AS(summarize(std::vector<EstimateResult>{}), std::invalid_argument);
}

TEST_CASE("row counts follow the plan dimensions") {
  ExperimentPlan p;
  p.families = {Family::ConfigPoisson};
  p.lambdas = {4.0};
  p.sizes = {500};
  p.sample_sizes = {100};
  p.estimators = {EstimatorKind::N2};
  p.graph_replicates = 2;
  p.sample_replicates = 3;
  const auto t = run_plan(p);
  CHECK(t.raw.size() == 6);
  CHECK(t.summary.size() == 1);
  CHECK(t.summary[0].summary.count == 6);

  const auto tiny = tiny_plan();
  const auto table = run_plan(tiny);
  CHECK(table.raw.size() == tiny.raw_row_count());
  CHECK(table.raw.size() == 2 * 1 * 2 * 2 * 2 * 2 * (3 + 2 * 2));
  CHECK(table.summary.size() == 2 * 2 * 2 * 7);
}

TEST_CASE("full-scale grid size") {
  ExperimentPlan p;
  p.families = {Family::ConfigLognormal, Family::ConfigPoisson, Family::ConfigExponential,
                Family::BarabasiAlbert, Family::ErdosRenyi};
  p.lambdas = {3, 5, 10};
  p.sizes = {5000, 10000, 20000, 40000};
  p.sample_sizes = {250, 500, 750};
  p.estimators = {EstimatorKind::N1, EstimatorKind::N2};
  p.graph_replicates = 30;
  p.sample_replicates = 30;
  CHECK(p.sampling_run_count() == 324000);
}

TEST_CASE("output is independent of thread count and repeatable") {
  const auto plan = tiny_plan();
  const auto a = csvs(run_plan(plan, 1));
  const auto b = csvs(run_plan(plan, 1));
  const auto c = csvs(run_plan(plan, 4));
  CHECK(a == b);
  CHECK(a == c);
  auto other = plan;
  other.seed = 18;
  CHECK(csvs(run_plan(other, 2)).first != a.first);
}

TEST_CASE("summaries recomputed from the raw CSV match exactly") {
  const auto table = run_plan(tiny_plan(), 2);
  const auto [raw, summary] = csvs(table);
  std::istringstream in(raw);
  const auto rows = read_raw_csv(in);
  REQUIRE(rows.size() == table.raw.size());
  std::ostringstream again_raw;
  write_raw_csv(again_raw, rows);
  CHECK(again_raw.str() == raw);
  std::ostringstream again;
  write_summary_csv(again, summarize_rows(rows));
  CHECK(again.str() == summary);
  for (const auto& row : table.summary) {
    const auto& s = row.summary;
    CHECK(s.failure_rate >= 0.0);
    CHECK(s.failure_rate <= 1.0);
    if (s.median) {
      CHECK(*s.q1 <= *s.median);
      CHECK(*s.median <= *s.q3);
    }
  }
}

TEST_CASE("CSV headers") {
  std::ostringstream raw;
  write_raw_csv(raw, {});
  CHECK(raw.str() ==
        "family,lambda,n,r,omega,estimator,graph_idx,sample_idx,estimate,failed,failure_cause\n");
  std::ostringstream summary;
  write_summary_csv(summary, {});
  CHECK(summary.str() == "family,lambda,n,r,omega,estimator,count,median,q1,q3,min,max,failure_rate\n");
}

TEST_CASE("plan files") {
  std::istringstream in(
      "# tiny grid\n"
      "families = poisson, er\n"
      "lambdas = 5\n"
      "sizes = 600,900\n"
      "r = 100, 200\n"
      "omegas = 1000,50000\n"
      "estimators = n1,n2,n3,n2psi,n3psi\n"
      "graph_replicates = 2\n"
      "sample_replicates = 2\n"
      "seed = 17\n");
  const auto p = parse_plan(in);
  CHECK(p.raw_row_count() == tiny_plan().raw_row_count());
  CHECK(csvs(run_plan(p)) == csvs(run_plan(tiny_plan())));

  auto bad = [](const std::string& text) {
    std::istringstream s(text);
    return parse_plan(s);
  };
  const std::string base = "families=poisson\nlambdas=5\nsizes=600\nr=100\n";
  CHECK_THROWS_AS(bad(base), PlanError);  // no estimators
  CHECK_NOTHROW(bad(base + "estimators=n2\n"));
  CHECK_THROWS_AS(bad(base + "estimators=n2psi\n"), PlanError);
  CHECK_THROWS_AS(bad(base + "estimators=n7\n"), PlanError);
  CHECK_THROWS_AS(bad(base + "estimators=n3\nnum_seeds=1\n"), PlanError);
  CHECK_THROWS_AS(bad(base + "estimators=n2\ngraph_replicates=0\n"), PlanError);
  CHECK_THROWS_AS(bad(base + "estimators=n2\ncolour=blue\n"), PlanError);
  CHECK_THROWS_AS(bad("families=poisson\nlambdas=5\nsizes=50\nr=100\nestimators=n2\n"), PlanError);
  CHECK_THROWS_AS(load_plan("/nonexistent.plan"), PlanError);
}

TEST_CASE("failure curve averages cells per n") {
  std::vector<SummaryRow> rows;
  auto add = [&](Family f, std::size_t n, std::size_t r, EstimatorKind k, double rate) {
    SummaryRow row;
    row.family = f;
    row.n = n;
    row.r = r;
    row.estimator = k;
    row.summary.failure_rate = rate;
    rows.push_back(row);
  };
  add(Family::ConfigPoisson, 5000, 250, EstimatorKind::N2, 0.0);
  add(Family::ErdosRenyi, 5000, 250, EstimatorKind::N2, 0.02);
  add(Family::ConfigPoisson, 40000, 250, EstimatorKind::N2, 0.08);
  add(Family::ConfigPoisson, 40000, 750, EstimatorKind::N2, 0.5);
  add(Family::ConfigPoisson, 40000, 250, EstimatorKind::N1, 0.5);
  const auto curve = failure_curve(rows, EstimatorKind::N2, 250);
  REQUIRE(curve.size() == 2);
  CHECK(curve[0].n == 5000);
  CHECK(curve[0].cells == 2);
  CHECK(curve[0].mean_failure_rate == doctest::Approx(0.01));
  CHECK(curve[1].mean_failure_rate == doctest::Approx(0.08));
}
