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
#include <vector>

#include "netsize/anonymity.hpp"
#include "netsize/graph.hpp"
#include "netsize/sampling.hpp"

namespace netsize {

/// Malformed input, with the offending line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeListSpec {
  std::filesystem::path path;
  /// Input lines are arcs; reciprocal arcs collapse into one undirected edge.
  bool directed = false;
  /// Keep only edges whose endpoints are both listed in this file.
  std::optional<std::filesystem::path> node_filter;
  bool dedupe = false;
  bool drop_loops = false;
};

struct IngestReport {
  std::size_t lines_read = 0;
  std::size_t raw_edges = 0;
  std::size_t dropped_filtered = 0;
  std::size_t dropped_loops = 0;
  std::size_t dropped_duplicates = 0;
  /// Listed or seen IDs left without any edge; they are not relabelled.
  std::size_t dropped_isolated = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

struct LoadedGraph {
  MultiGraph graph;
  /// original_ids[new_id] is the ID used in the file. New IDs follow the
  /// ascending order of the original ones.
  std::vector<std::uint64_t> original_ids;
  IngestReport report;
};

/// Reads "u v" lines (whitespace separated, '#' comments, blank lines
/// ignored). Throws ParseError on a malformed line or when no edge survives.
LoadedGraph load_edge_list(const EdgeListSpec& spec);
LoadedGraph parse_edge_list(std::istream& in, const EdgeListSpec& spec,
                            const std::vector<std::uint64_t>* node_filter = nullptr);

void write_edge_list(std::ostream& out, const MultiGraph& g);
/// "new_id original_id" per line.
void write_id_map(std::ostream& out, std::span<const std::uint64_t> original_ids);

/// Sample dump CSV: subject,recruiter,component,degree,alters where recruiter
/// is SEED for seeds, component numbers the referral trees in seed order, and
/// alters is a ';'-joined list of alter IDs or codes.
void write_sample_dump(std::ostream& out, const RdsSample& sample);
void write_sample_dump(std::ostream& out, const HashedSample& sample);
/// Reads either kind of dump; identities come back as codes.
HashedSample read_sample_dump(std::istream& in);

/// Interprets a dump whose codes are identities. Throws std::invalid_argument
/// if a subject code repeats or does not fit a vertex ID.
RdsSample to_rds_sample(const HashedSample& dump);

struct ClusteringStats {
  double average_clustering = 0.0;
  double transitivity = 0.0;
  std::size_t triangles = 0;
};

/// Computed on the simple graph underlying g (loops and parallel copies
/// ignored). Vertices of degree < 2 contribute 0 to the average.
ClusteringStats clustering_stats(const MultiGraph& g);

}  // namespace netsize
