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

#include "netsize/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <unordered_set>
#include <utility>

namespace netsize {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::optional<std::uint64_t> parse_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end || token.empty()) return std::nullopt;
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
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

std::vector<std::uint64_t> read_node_filter(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open node filter " + path.string(), 0);
  std::vector<std::uint64_t> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto id = parse_uint(body);
    if (!id) throw ParseError("malformed node id in " + path.string(), line_no);
    ids.push_back(*id);
  }
  return ids;
}

}  // namespace

LoadedGraph parse_edge_list(std::istream& in, const EdgeListSpec& spec,
                            const std::vector<std::uint64_t>* node_filter) {
  std::optional<std::unordered_set<std::uint64_t>> allowed;
  if (node_filter) allowed.emplace(node_filter->begin(), node_filter->end());

  IngestReport report;
  std::set<std::uint64_t> seen;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> kept;
  std::set<std::pair<std::uint64_t, std::uint64_t>> unique_pairs;
  const bool collapse = spec.dedupe || spec.directed;

  std::string line;
  while (std::getline(in, line)) {
    ++report.lines_read;
    const auto body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto tokens = split_ws(body);
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex ids per line", report.lines_read);
    }
    const auto a = parse_uint(tokens[0]);
    const auto b = parse_uint(tokens[1]);
    if (!a || !b) throw ParseError("malformed vertex id", report.lines_read);
    ++report.raw_edges;
    seen.insert(*a);
    seen.insert(*b);
    if (allowed && (!allowed->contains(*a) || !allowed->contains(*b))) {
      ++report.dropped_filtered;
      continue;
    }
    if (*a == *b && spec.drop_loops) {
      ++report.dropped_loops;
      continue;
    }
    const auto key = std::minmax(*a, *b);
    if (collapse && !unique_pairs.insert(key).second) {
      ++report.dropped_duplicates;
      continue;
    }
    kept.emplace_back(*a, *b);
  }
  if (kept.empty()) throw ParseError("edge list contains no usable edges", 0);

  std::set<std::uint64_t> used;
  for (const auto& [a, b] : kept) {
    used.insert(a);
    used.insert(b);
  }
  if (allowed) {
    for (std::uint64_t id : *allowed) seen.insert(id);
  }
  report.dropped_isolated = seen.size() - used.size();

  LoadedGraph out;
  out.original_ids.assign(used.begin(), used.end());
  std::map<std::uint64_t, VertexId> relabel;
  for (const auto id : out.original_ids) {
    relabel.emplace(id, static_cast<VertexId>(relabel.size()));
  }
  out.graph = MultiGraph(out.original_ids.size());
  for (const auto& [a, b] : kept) out.graph.add_edge(relabel.at(a), relabel.at(b));
  report.nodes = out.graph.num_vertices();
  report.edges = out.graph.num_edges();
  out.report = report;
  return out;
}

LoadedGraph load_edge_list(const EdgeListSpec& spec) {
  std::ifstream in(spec.path);
  if (!in) throw ParseError("cannot open edge list " + spec.path.string(), 0);
  if (spec.node_filter) {
    const auto filter = read_node_filter(*spec.node_filter);
    return parse_edge_list(in, spec, &filter);
  }
  return parse_edge_list(in, spec, nullptr);
}

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_id_map(std::ostream& out, std::span<const std::uint64_t> original_ids) {
  for (std::size_t i = 0; i < original_ids.size(); ++i) {
    out << i << ' ' << original_ids[i] << '\n';
  }
}

namespace {

constexpr std::string_view kDumpHeader = "subject,recruiter,component,degree,alters";

template <typename Range>
void write_joined(std::ostream& out, const Range& items) {
  bool first = true;
  for (const auto& item : items) {
    if (!first) out << ';';
    out << item;
    first = false;
  }
}

}  // namespace

void write_sample_dump(std::ostream& out, const RdsSample& sample) {
  std::map<VertexId, std::size_t> component_index;
  for (VertexId s : sample.forest.seeds) component_index.emplace(s, component_index.size());
  std::map<VertexId, VertexId> recruiter;
  for (const Edge& e : sample.forest.edges) recruiter.emplace(e.v, e.u);

  out << kDumpHeader << '\n';
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const VertexId u = sample.order[i];
    out << u << ',';
    if (auto it = recruiter.find(u); it != recruiter.end()) {
      out << it->second;
    } else {
      out << "SEED";
    }
    out << ',' << component_index.at(sample.forest.seed_of.at(u)) << ',' << sample.degrees[i]
        << ',';
    std::vector<VertexId> alters = sample.alters[i];
    std::sort(alters.begin(), alters.end());
    write_joined(out, alters);
    out << '\n';
  }
}

void write_sample_dump(std::ostream& out, const HashedSample& sample) {
  out << kDumpHeader << '\n';
  for (const auto& r : sample.respondents()) {
    out << r.code << ',';
    if (r.recruiter_code) {
      out << *r.recruiter_code;
    } else {
      out << "SEED";
    }
    out << ',' << r.component << ',' << r.degree << ',';
    std::vector<Code> alters;
    for (const auto& [code, n] : r.alters.counts()) alters.insert(alters.end(), n, code);
    write_joined(out, alters);
    out << '\n';
  }
}

HashedSample read_sample_dump(std::istream& in) {
  std::vector<HashedRespondent> respondents;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (body == kDumpHeader) continue;
    }
    const auto fields = split(body, ',');
    if (fields.size() != 5) throw ParseError("expected 5 comma-separated fields", line_no);
    HashedRespondent r;
    const auto code = parse_uint(trim(fields[0]));
    if (!code) throw ParseError("malformed subject code", line_no);
    r.code = *code;
    const auto recruiter = trim(fields[1]);
    if (recruiter != "SEED") {
      const auto parsed = parse_uint(recruiter);
      if (!parsed) throw ParseError("malformed recruiter (expected code or SEED)", line_no);
      r.recruiter_code = *parsed;
    }
    const auto component = parse_uint(trim(fields[2]));
    const auto degree = parse_uint(trim(fields[3]));
    if (!component || !degree) throw ParseError("malformed component or degree", line_no);
    r.component = static_cast<std::size_t>(*component);
    r.degree = static_cast<std::size_t>(*degree);
    const auto alters = trim(fields[4]);
    if (!alters.empty()) {
      for (auto token : split(alters, ';')) {
        const auto alter = parse_uint(trim(token));
        if (!alter) throw ParseError("malformed alter code", line_no);
        r.alters.insert(*alter);
      }
    }
    respondents.push_back(std::move(r));
  }
  if (respondents.empty()) throw ParseError("sample dump has no respondents", 0);
  try {
    return HashedSample(std::move(respondents));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

RdsSample to_rds_sample(const HashedSample& dump) {
  auto as_vertex = [](Code c) {
    if (c > std::numeric_limits<VertexId>::max()) {
      throw std::invalid_argument("to_rds_sample: code " + std::to_string(c) +
                                  " does not fit a vertex id");
    }
    return static_cast<VertexId>(c);
  };
  RdsSample sample;
  std::map<std::size_t, VertexId> seed_of_component;
  std::unordered_set<VertexId> subjects;
  for (const auto& r : dump.respondents()) {
    const VertexId u = as_vertex(r.code);
    if (!subjects.insert(u).second) {
      throw std::invalid_argument("to_rds_sample: subject " + std::to_string(u) +
                                  " appears twice");
    }
    if (!r.recruiter_code) {
      if (!seed_of_component.emplace(r.component, u).second) {
        throw std::invalid_argument("to_rds_sample: component " + std::to_string(r.component) +
                                    " has two seeds");
      }
      sample.forest.seeds.push_back(u);
    }
  }
  for (const auto& r : dump.respondents()) {
    const VertexId u = as_vertex(r.code);
    auto seed = seed_of_component.find(r.component);
    if (seed == seed_of_component.end()) {
      throw std::invalid_argument("to_rds_sample: component " + std::to_string(r.component) +
                                  " has no seed");
    }
    sample.forest.seed_of[u] = seed->second;
    if (r.recruiter_code) sample.forest.edges.push_back({as_vertex(*r.recruiter_code), u});
    sample.order.push_back(u);
    sample.degrees.push_back(r.degree);
    std::vector<VertexId> alters;
    for (const auto& [code, n] : r.alters.counts()) alters.insert(alters.end(), n, as_vertex(code));
    sample.alters.push_back(std::move(alters));
  }
  return sample;
}

ClusteringStats clustering_stats(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (w != v) adj[v].push_back(w);
    }
    std::sort(adj[v].begin(), adj[v].end());
    adj[v].erase(std::unique(adj[v].begin(), adj[v].end()), adj[v].end());
  }
  // Orient each edge from lower to higher (degree, id) rank.
  auto before = [&](VertexId a, VertexId b) {
    return adj[a].size() < adj[b].size() || (adj[a].size() == adj[b].size() && a < b);
  };
  std::vector<std::vector<VertexId>> forward(n);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : adj[v]) {
      if (before(v, w)) forward[v].push_back(w);
    }
  }
  std::vector<std::size_t> local(n, 0);
  std::vector<char> mark(n, 0);
  std::size_t triangles = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : forward[u]) mark[v] = 1;
    for (VertexId v : forward[u]) {
      for (VertexId w : forward[v]) {
        if (mark[w]) {
          ++triangles;
          ++local[u];
          ++local[v];
          ++local[w];
        }
      }
    }
    for (VertexId v : forward[u]) mark[v] = 0;
  }

  ClusteringStats stats;
  stats.triangles = triangles;
  if (n == 0) return stats;
  double clustering_sum = 0.0;
  double triples = 0.0;
  for (VertexId v = 0; v < n; ++v) {
    const auto d = static_cast<double>(adj[v].size());
    if (d < 2) continue;
    const double pairs = d * (d - 1.0) / 2.0;
    triples += pairs;
    clustering_sum += static_cast<double>(local[v]) / pairs;
  }
  stats.average_clustering = clustering_sum / static_cast<double>(n);
  stats.transitivity = triples > 0 ? 3.0 * static_cast<double>(triangles) / triples : 0.0;
  return stats;
}

}  // namespace netsize
