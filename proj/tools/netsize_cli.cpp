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

// Command-line front end: generate, sample, estimate, experiment, ingest, stats.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "netsize/anonymity.hpp"
#include "netsize/estimators.hpp"
#include "netsize/generators.hpp"
#include "netsize/harness.hpp"
#include "netsize/io.hpp"
#include "netsize/random.hpp"
#include "netsize/sampling.hpp"

#ifndef NETSIZE_VERSION
#define NETSIZE_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using namespace netsize;

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string out;
};

/// Reproducibility header. It goes to stderr so stdout stays machine readable.
void header(const Globals& g, std::string_view command,
            const std::vector<std::pair<std::string, std::string>>& params) {
  std::cerr << fmt::format("# netsize {} {}\n# rng-seed {}\n", NETSIZE_VERSION, command, g.seed);
  for (const auto& [k, v] : params) std::cerr << fmt::format("# {} {}\n", k, v);
}

/// Writes to --out when given, stdout otherwise.
template <typename Fn>
void emit(const Globals& g, Fn&& write) {
  if (g.out.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot write " + g.out);
  write(file);
}

MultiGraph read_graph(const std::string& path) {
  EdgeListSpec spec;
  spec.path = path;
  return load_edge_list(spec).graph;
}

HashedSample read_dump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample " + path);
  return read_sample_dump(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hidden-population size estimation from referral samples"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--rng-seed", globals.seed, "Master random seed")->capture_default_str();
  app.add_option("--threads", globals.threads, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--out", globals.out, "Output file (experiment: directory)");
  app.set_version_flag("--version", NETSIZE_VERSION);

  // generate
  std::string family_text = "poisson";
  double lambda = 10.0;
  std::size_t n = 1000;
  double clustering = 0.0;
  auto* generate = app.add_subcommand("generate", "Emit an edge list for a random graph family");
  generate->add_option("--family", family_text, "lognormal|poisson|exponential|ba|er")
      ->required();
  generate->add_option("--lambda", lambda, "Mean degree")->required()->check(CLI::PositiveNumber);
  generate->add_option("--n", n, "Number of vertices")->required()->check(CLI::Range(2, 1 << 30));
  generate->add_option("--clustering", clustering,
                       "Rewire to at least this average clustering coefficient");

  // sample
  std::string graph_path;
  std::string mode = "rds";
  std::size_t r = 500;
  std::size_t seeds = 7;
  std::optional<std::uint64_t> sample_omega;
  auto* sample = app.add_subcommand("sample", "Draw a sample from an edge list and dump it");
  sample->add_option("--graph", graph_path, "Edge list")->required()->check(CLI::ExistingFile);
  sample->add_option("--mode", mode, "rds|uniform")
      ->check(CLI::IsMember({"rds", "uniform"}))
      ->capture_default_str();
  sample->add_option("--r", r, "Sample size")->capture_default_str()->check(CLI::PositiveNumber);
  sample->add_option("--seeds", seeds, "Number of RDS seeds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  sample->add_option("--omega", sample_omega, "Hash identities into a space of this size");

  // estimate
  std::string estimator_text;
  std::string sample_path;
  std::optional<std::uint64_t> omega;
  std::optional<std::uint64_t> hash_ids;
  auto* estimate = app.add_subcommand("estimate", "Apply an estimator to a sample dump");
  estimate->add_option("--estimator", estimator_text, "n1|n2|n3|n2psi|n3psi")->required();
  estimate->add_option("--sample", sample_path, "Sample dump CSV")
      ->required()
      ->check(CLI::ExistingFile);
  estimate->add_option("--omega", omega, "Hash space size of the dump's codes");
  estimate->add_option("--hash-ids", hash_ids,
                       "Hash a plaintext dump into a space of this size first");

  // experiment
  std::string plan_path;
  auto* experiment = app.add_subcommand("experiment", "Run a plan file");
  experiment->add_option("--plan", plan_path, "Plan file")->required()->check(CLI::ExistingFile);

  // ingest
  EdgeListSpec ingest_spec;
  std::string filter_path;
  std::string id_map_path;
  auto* ingest = app.add_subcommand("ingest", "Normalize an external edge list");
  ingest->add_option("--input", ingest_spec.path, "Edge list")
      ->required()
      ->check(CLI::ExistingFile);
  ingest->add_flag("--directed", ingest_spec.directed, "Symmetrize arcs");
  ingest->add_flag("--dedupe", ingest_spec.dedupe, "Collapse parallel edges");
  ingest->add_flag("--drop-loops", ingest_spec.drop_loops, "Remove self-loops");
  ingest->add_option("--filter", filter_path, "Keep only the IDs listed in this file")
      ->check(CLI::ExistingFile);
  ingest->add_option("--id-map", id_map_path, "Where to write 'new original' ID pairs");

  // stats
  std::string stats_path;
  auto* stats = app.add_subcommand("stats", "Degree and clustering statistics of an edge list");
  stats->add_option("--graph", stats_path, "Edge list")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      const auto family = parse_family(family_text);
      if (!family) throw std::runtime_error("unknown family " + family_text);
      header(globals, "generate",
             {{"family", family_text}, {"lambda", fmt::format("{}", lambda)},
              {"n", std::to_string(n)}, {"clustering", fmt::format("{}", clustering)}});
      Rng rng = make_rng(globals.seed);
      MultiGraph g = netsize::generate({*family, lambda, n}, rng);
      if (clustering > 0.0) {
        auto rewired = rewire_for_clustering(g, clustering, rng);
        std::cerr << fmt::format("# achieved-clustering {}\n", rewired.average_clustering);
        g = std::move(rewired.graph);
      }
      emit(globals, [&](std::ostream& out) { write_edge_list(out, g); });
    } else if (*sample) {
      header(globals, "sample",
             {{"graph", graph_path}, {"mode", mode}, {"r", std::to_string(r)},
              {"seeds", std::to_string(seeds)},
              {"omega", sample_omega ? std::to_string(*sample_omega) : "none"}});
      const MultiGraph g = read_graph(graph_path);
      if (r > g.num_vertices()) throw std::runtime_error("r exceeds the number of vertices");
      RdsSample s;
      if (mode == "uniform") {
        Rng rng = make_rng(derive_seed(globals.seed, {1}));
        s = observe_uniform(g, uniform_sample(g, r, rng));
      } else {
        RdsConfig config;
        config.num_seeds = seeds;
        config.target = r;
        config.seed = derive_seed(globals.seed, {2});
        s = rds_capture(g, config);
      }
      if (sample_omega) {
        if (*sample_omega == 0) throw std::runtime_error("--omega must be positive");
        Rng rng = make_rng(derive_seed(globals.seed, {3}));
        const auto codes =
            assign_hashes(g.num_vertices(), HashSpace::random_function(*sample_omega), rng);
        const HashedSample hs = hashed_view(s, codes);
        emit(globals, [&](std::ostream& out) { write_sample_dump(out, hs); });
      } else {
        emit(globals, [&](std::ostream& out) { write_sample_dump(out, s); });
      }
    } else if (*estimate) {
      const auto kind = parse_estimator(estimator_text);
      if (!kind) throw std::runtime_error("unknown estimator " + estimator_text);
      header(globals, "estimate",
             {{"estimator", estimator_text}, {"sample", sample_path},
              {"omega", omega ? std::to_string(*omega) : "none"},
              {"hash-ids", hash_ids ? std::to_string(*hash_ids) : "none"}});
      HashedSample dump = read_dump(sample_path);
      if (hash_ids) {
        if (*hash_ids == 0) throw std::runtime_error("--hash-ids must be positive");
        // Codes are re-drawn for every identity appearing in the dump.
        const RdsSample plain = to_rds_sample(dump);
        VertexId largest = 0;
        for (std::size_t i = 0; i < plain.size(); ++i) {
          largest = std::max(largest, plain.order[i]);
          for (VertexId a : plain.alters[i]) largest = std::max(largest, a);
        }
        Rng rng = make_rng(derive_seed(globals.seed, {3}));
        const auto codes =
            assign_hashes(std::size_t{largest} + 1, HashSpace::random_function(*hash_ids), rng);
        dump = hashed_view(plain, codes);
        if (!omega) omega = hash_ids;
      }
      EstimateResult result = EstimateResult::failure(FailureCause::NoRoot);
      if (is_hashed(*kind)) {
        if (!omega || *omega == 0) throw std::runtime_error("hashed estimators need --omega");
        const auto w = static_cast<double>(*omega);
        result = *kind == EstimatorKind::N2Psi ? estimate_n2_psi(dump, w)
                                               : estimate_n3_psi(dump, w);
      } else {
        const RdsSample plain = to_rds_sample(dump);
        switch (*kind) {
          case EstimatorKind::N1: result = estimate_n1(plain); break;
          case EstimatorKind::N2: result = estimate_n2(plain); break;
          default: result = estimate_n3(plain); break;
        }
      }
      const std::string line =
          result.failed() ? fmt::format("{} failed {}\n", estimator_text,
                                        failure_name(*result.failure_cause()))
                          : fmt::format("{} {}\n", estimator_text, result.value());
      emit(globals, [&](std::ostream& out) { out << line; });
    } else if (*experiment) {
      const ExperimentPlan plan_from_file = load_plan(plan_path);
      ExperimentPlan plan = plan_from_file;
      if (app.get_option("--rng-seed")->count() > 0) plan.seed = globals.seed;
      header(globals, "experiment",
             {{"plan", plan_path}, {"plan-seed", std::to_string(plan.seed)},
              {"threads", std::to_string(globals.threads)},
              {"raw-rows", std::to_string(plan.raw_row_count())}});
      const fs::path dir = globals.out.empty() ? fs::path(".") : fs::path(globals.out);
      fs::create_directories(dir);
      const ResultTable table = run_plan(plan, globals.threads);
      std::ofstream raw(dir / "raw.csv");
      std::ofstream summary(dir / "summary.csv");
      if (!raw || !summary) throw std::runtime_error("cannot write into " + dir.string());
      write_raw_csv(raw, table.raw);
      write_summary_csv(summary, table.summary);
    } else if (*ingest) {
      if (!filter_path.empty()) ingest_spec.node_filter = filter_path;
      header(globals, "ingest",
             {{"input", ingest_spec.path.string()},
              {"directed", ingest_spec.directed ? "yes" : "no"},
              {"dedupe", ingest_spec.dedupe ? "yes" : "no"},
              {"drop-loops", ingest_spec.drop_loops ? "yes" : "no"},
              {"filter", filter_path.empty() ? "none" : filter_path}});
      const LoadedGraph loaded = load_edge_list(ingest_spec);
      const IngestReport& rep = loaded.report;
      std::cerr << fmt::format(
          "# lines {} raw-edges {} filtered {} loops {} duplicates {} isolated {}\n"
          "# nodes {} edges {}\n",
          rep.lines_read, rep.raw_edges, rep.dropped_filtered, rep.dropped_loops,
          rep.dropped_duplicates, rep.dropped_isolated, rep.nodes, rep.edges);
      emit(globals, [&](std::ostream& out) { write_edge_list(out, loaded.graph); });
      if (!id_map_path.empty()) {
        std::ofstream map(id_map_path);
        if (!map) throw std::runtime_error("cannot write " + id_map_path);
        write_id_map(map, loaded.original_ids);
      }
    } else if (*stats) {
      header(globals, "stats", {{"graph", stats_path}});
      const MultiGraph g = read_graph(stats_path);
      const ClusteringStats cs = clustering_stats(g);
      const std::string text = fmt::format(
          "nodes {}\nedges {}\nmean_degree {}\naverage_clustering {}\ntransitivity {}\n"
          "triangles {}\n",
          g.num_vertices(), g.num_edges(),
          2.0 * static_cast<double>(g.num_edges()) / static_cast<double>(g.num_vertices()),
          cs.average_clustering, cs.transitivity, cs.triangles);
      emit(globals, [&](std::ostream& out) { out << text; });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
