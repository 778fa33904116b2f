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

#include "netsize/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netsize {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::ConfigLognormal: return "lognormal";
    case Family::ConfigPoisson: return "poisson";
    case Family::ConfigExponential: return "exponential";
    case Family::BarabasiAlbert: return "ba";
    case Family::ErdosRenyi: return "er";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "lognormal" || lower == "l") return Family::ConfigLognormal;
  if (lower == "poisson" || lower == "p") return Family::ConfigPoisson;
  if (lower == "exponential" || lower == "x") return Family::ConfigExponential;
  if (lower == "ba" || lower == "barabasi-albert" || lower == "b") return Family::BarabasiAlbert;
  if (lower == "er" || lower == "erdos-renyi" || lower == "e") return Family::ErdosRenyi;
  return std::nullopt;
}

namespace {

std::size_t round_half_up(double x) {
  return static_cast<std::size_t>(std::floor(x + 0.5));
}

}  // namespace

std::vector<std::size_t> sample_degrees(const DegreeDistribution& dist, std::size_t n,
                                        Rng& rng) {
  if (dist.kind == DegreeKind::Explicit) {
    if (dist.explicit_degrees.size() != n) {
      throw std::invalid_argument("sample_degrees: explicit sequence has " +
                                  std::to_string(dist.explicit_degrees.size()) +
                                  " entries, expected " + std::to_string(n));
    }
    return dist.explicit_degrees;
  }
  if (n == 0) throw std::invalid_argument("sample_degrees: n must be positive");
  if (!(dist.lambda >= 1.0)) {
    throw std::invalid_argument("sample_degrees: lambda must be >= 1");
  }
  const double excess_mean = dist.lambda - 1.0;
  std::vector<std::size_t> out(n, 1);
  if (excess_mean == 0.0) return out;

  switch (dist.kind) {
    case DegreeKind::Poisson: {
      std::poisson_distribution<std::size_t> draw(excess_mean);
      for (auto& d : out) d = 1 + draw(rng);
      break;
    }
    case DegreeKind::Exponential: {
      std::exponential_distribution<double> draw(1.0 / excess_mean);
      for (auto& d : out) d = std::max<std::size_t>(1, round_half_up(1.0 + draw(rng)));
      break;
    }
    case DegreeKind::Lognormal: {
      // Moment matching: mean excess_mean, standard deviation 1.
      const double sigma2 = std::log1p(1.0 / (excess_mean * excess_mean));
      const double mu = std::log(excess_mean) - 0.5 * sigma2;
      std::lognormal_distribution<double> draw(mu, std::sqrt(sigma2));
      for (auto& d : out) d = std::max<std::size_t>(1, round_half_up(1.0 + draw(rng)));
      break;
    }
    case DegreeKind::Explicit:
      break;
  }
  return out;
}

MultiGraph configuration_graph(std::vector<std::size_t> degrees, Rng& rng) {
  if (degrees.empty()) {
    throw std::invalid_argument("configuration_graph: empty degree sequence");
  }
  std::size_t total = 0;
  for (std::size_t d : degrees) total += d;
  if (total % 2 == 1) {
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    ++degrees[pick(rng)];
    ++total;
  }
  std::vector<VertexId> stubs;
  stubs.reserve(total);
  for (std::size_t v = 0; v < degrees.size(); ++v) {
    stubs.insert(stubs.end(), degrees[v], static_cast<VertexId>(v));
  }
  std::shuffle(stubs.begin(), stubs.end(), rng);
  MultiGraph g(degrees.size());
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) g.add_edge(stubs[i], stubs[i + 1]);
  return g;
}

namespace {

// Fenwick tree over integer weights with prefix-sum search.
class WeightTree {
 public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0), weights_(n, 0) {
    while ((std::size_t{1} << log_) <= n) ++log_;
  }

  void set(std::size_t i, std::uint64_t w) {
    const auto delta = static_cast<std::int64_t>(w) - static_cast<std::int64_t>(weights_[i]);
    weights_[i] = w;
    total_ = static_cast<std::uint64_t>(static_cast<std::int64_t>(total_) + delta);
    for (std::size_t k = i + 1; k < tree_.size(); k += k & (~k + 1)) {
      tree_[k] = static_cast<std::uint64_t>(static_cast<std::int64_t>(tree_[k]) + delta);
    }
  }

  std::uint64_t weight(std::size_t i) const { return weights_[i]; }
  std::uint64_t total() const { return total_; }

  // Smallest index whose inclusive prefix sum exceeds target.
  std::size_t find(std::uint64_t target) const {
    std::size_t pos = 0;
    for (int b = log_; b >= 0; --b) {
      const std::size_t next = pos + (std::size_t{1} << b);
      if (next < tree_.size() && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<std::uint64_t> tree_;
  std::vector<std::uint64_t> weights_;
  std::uint64_t total_ = 0;
  int log_ = 0;
};

}  // namespace

MultiGraph barabasi_albert(double lambda, std::size_t n, Rng& rng) {
  if (!(lambda >= 2.0)) throw std::invalid_argument("barabasi_albert: lambda must be >= 2");
  if (!(static_cast<double>(n) > lambda)) {
    throw std::invalid_argument("barabasi_albert: n must exceed lambda");
  }
  const auto core = static_cast<std::size_t>(std::ceil(lambda));
  const auto base = static_cast<std::size_t>(std::floor(lambda / 2.0));
  // E[attachments] = lambda / 2, so the mean degree tends to lambda.
  const double p_base = 1.0 + static_cast<double>(base) - lambda / 2.0;

  MultiGraph g(n);
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t a = 0; a < core; ++a) {
    for (std::size_t b = a + 1; b < core; ++b) {
      g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      ++deg[a];
      ++deg[b];
    }
  }
  WeightTree weights(n);
  for (std::size_t v = 0; v < core; ++v) weights.set(v, 1 + deg[v]);

  std::bernoulli_distribution take_base(std::clamp(p_base, 0.0, 1.0));
  std::vector<std::size_t> targets;
  for (std::size_t i = core; i < n; ++i) {
    const std::size_t attach = std::min(take_base(rng) ? base : base + 1, i);
    targets.clear();
    for (std::size_t l = 0; l < attach; ++l) {
      std::uniform_int_distribution<std::uint64_t> draw(0, weights.total() - 1);
      const std::size_t w = weights.find(draw(rng));
      targets.push_back(w);
      weights.set(w, 0);
    }
    for (std::size_t w : targets) {
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(w));
      ++deg[w];
      ++deg[i];
      weights.set(w, 1 + deg[w]);
    }
    weights.set(i, 1 + deg[i]);
  }
  return g;
}

MultiGraph erdos_renyi(double lambda, std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("erdos_renyi: n must be positive");
  const double max_lambda = static_cast<double>(n) - 1.0;
  if (!(lambda >= 0.0) || lambda > max_lambda) {
    throw std::invalid_argument("erdos_renyi: lambda must lie in [0, n-1]");
  }
  MultiGraph g(n);
  if (n < 2 || lambda == 0.0) return g;
  const double p = lambda / max_lambda;
  if (p >= 1.0) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
    return g;
  }
  // Geometric skipping over the lower triangle (Batagelj & Brandes).
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(w));
  }
  return g;
}

MultiGraph generate(const GraphFamily& family, Rng& rng) {
  if (family.n < 2) throw std::invalid_argument("generate: n must be at least 2");
  switch (family.family) {
    case Family::ConfigLognormal:
      return configuration_graph(
          sample_degrees({DegreeKind::Lognormal, family.lambda, {}}, family.n, rng), rng);
    case Family::ConfigPoisson:
      return configuration_graph(
          sample_degrees({DegreeKind::Poisson, family.lambda, {}}, family.n, rng), rng);
    case Family::ConfigExponential:
      return configuration_graph(
          sample_degrees({DegreeKind::Exponential, family.lambda, {}}, family.n, rng), rng);
    case Family::BarabasiAlbert:
      return barabasi_albert(family.lambda, family.n, rng);
    case Family::ErdosRenyi:
      return erdos_renyi(family.lambda, family.n, rng);
  }
  throw std::invalid_argument("generate: unknown family");
}

namespace {

class SimpleGraph {
 public:
  explicit SimpleGraph(const MultiGraph& g) : adj_(g.num_vertices()) {
    for (const Edge& e : g.edges()) {
      if (e.u != e.v) {
        adj_[e.u].insert(e.v);
        adj_[e.v].insert(e.u);
      }
    }
    triangles_.assign(adj_.size(), 0);
    pairs_.assign(adj_.size(), 0.0);
    for (VertexId v = 0; v < adj_.size(); ++v) {
      const double d = static_cast<double>(adj_[v].size());
      pairs_[v] = d * (d - 1.0) / 2.0;
    }
    for (VertexId v = 0; v < adj_.size(); ++v) {
      for (VertexId a : adj_[v]) {
        for (VertexId b : adj_[v]) {
          if (a < b && adj_[a].contains(b)) ++triangles_[v];
        }
      }
    }
    for (VertexId v = 0; v < adj_.size(); ++v) clustering_sum_ += local(v);
  }

  std::size_t size() const { return adj_.size(); }
  const std::unordered_set<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  bool adjacent(VertexId a, VertexId b) const { return adj_[a].contains(b); }
  double average_clustering() const {
    return adj_.empty() ? 0.0 : clustering_sum_ / static_cast<double>(adj_.size());
  }
  double clustering_sum() const { return clustering_sum_; }

  void add(VertexId a, VertexId b) { toggle(a, b, +1); }
  void remove(VertexId a, VertexId b) { toggle(a, b, -1); }

  MultiGraph to_multigraph() const {
    MultiGraph g(adj_.size());
    for (VertexId a = 0; a < adj_.size(); ++a) {
      std::vector<VertexId> sorted(adj_[a].begin(), adj_[a].end());
      std::sort(sorted.begin(), sorted.end());
      for (VertexId b : sorted) {
        if (a < b) g.add_edge(a, b);
      }
    }
    return g;
  }

 private:
  // Uses the degrees fixed at construction; swaps preserve them.
  double local(VertexId v) const {
    if (pairs_[v] <= 0.0) return 0.0;
    return static_cast<double>(triangles_[v]) / pairs_[v];
  }

  void bump(VertexId v, int delta) {
    clustering_sum_ -= local(v);
    triangles_[v] = static_cast<std::size_t>(static_cast<std::int64_t>(triangles_[v]) + delta);
    clustering_sum_ += local(v);
  }

  // Adds (sign +1) or removes (sign -1) edge (a,b), updating triangle counts.
  void toggle(VertexId a, VertexId b, int sign) {
    if (sign < 0) {
      adj_[a].erase(b);
      adj_[b].erase(a);
    }
    const auto& small = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    const auto& large = &small == &adj_[a] ? adj_[b] : adj_[a];
    for (VertexId c : small) {
      if (large.contains(c)) {
        bump(a, sign);
        bump(b, sign);
        bump(c, sign);
      }
    }
    if (sign > 0) {
      adj_[a].insert(b);
      adj_[b].insert(a);
    }
  }

  std::vector<std::unordered_set<VertexId>> adj_;
  std::vector<std::size_t> triangles_;
  std::vector<double> pairs_;
  double clustering_sum_ = 0.0;
};

template <typename Set>
VertexId pick(const Set& set, Rng& rng) {
  std::uniform_int_distribution<std::size_t> draw(0, set.size() - 1);
  auto it = set.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(draw(rng)));
  return *it;
}

}  // namespace

ClusteredGraph rewire_for_clustering(const MultiGraph& g, double target, Rng& rng,
                                     std::size_t max_attempts) {
  SimpleGraph sg(g);
  if (sg.size() == 0) return {sg.to_multigraph(), 0.0};
  std::vector<VertexId> hubs;
  for (VertexId v = 0; v < sg.size(); ++v) {
    if (sg.neighbors(v).size() >= 2) hubs.push_back(v);
  }
  if (hubs.empty()) return {sg.to_multigraph(), sg.average_clustering()};

  std::uniform_int_distribution<std::size_t> pick_hub(0, hubs.size() - 1);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    if (sg.average_clustering() >= target) break;
    const VertexId u = hubs[pick_hub(rng)];
    const VertexId v = pick(sg.neighbors(u), rng);
    const VertexId w = pick(sg.neighbors(u), rng);
    if (v == w || sg.adjacent(v, w)) continue;
    if (sg.neighbors(v).size() < 2 || sg.neighbors(w).size() < 2) continue;
    const VertexId x = pick(sg.neighbors(v), rng);
    const VertexId y = pick(sg.neighbors(w), rng);
    if (x == u || y == u || x == y || x == w || y == v || sg.adjacent(x, y)) continue;

    const double before = sg.clustering_sum();
    sg.remove(v, x);
    sg.remove(w, y);
    sg.add(v, w);
    sg.add(x, y);
    if (sg.clustering_sum() <= before + 1e-12) {
      sg.remove(x, y);
      sg.remove(v, w);
      sg.add(w, y);
      sg.add(v, x);
    }
  }
  return {sg.to_multigraph(), sg.average_clustering()};
}

}  // namespace netsize
