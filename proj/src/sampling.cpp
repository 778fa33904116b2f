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

#include "netsize/sampling.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace netsize {

std::optional<VertexId> RdsSample::recruiter_of(VertexId v) const {
  for (const Edge& e : forest.edges) {
    if (e.v == v) return e.u;
  }
  return std::nullopt;
}

namespace {

// Partial Fisher-Yates over 0..n-1 using a sparse swap table.
class SparseShuffle {
 public:
  explicit SparseShuffle(std::size_t n) : n_(n) {}

  std::size_t remaining() const { return n_ - drawn_; }

  VertexId next(Rng& rng) {
    std::uniform_int_distribution<std::size_t> draw(drawn_, n_ - 1);
    const std::size_t j = draw(rng);
    const std::size_t picked = at(j);
    swapped_[j] = at(drawn_);
    ++drawn_;
    return static_cast<VertexId>(picked);
  }

 private:
  std::size_t at(std::size_t i) const {
    auto it = swapped_.find(i);
    return it == swapped_.end() ? i : it->second;
  }

  std::size_t n_;
  std::size_t drawn_ = 0;
  std::unordered_map<std::size_t, std::size_t> swapped_;
};

}  // namespace

std::vector<VertexId> uniform_sample(const MultiGraph& g, std::size_t r, Rng& rng) {
  const std::size_t n = g.num_vertices();
  if (r > n) {
    throw std::invalid_argument("uniform_sample: r=" + std::to_string(r) +
                                " exceeds n=" + std::to_string(n));
  }
  SparseShuffle shuffle(n);
  std::vector<VertexId> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) out.push_back(shuffle.next(rng));
  return out;
}

RdsSample observe(const MultiGraph& g, std::vector<VertexId> order, ReferralForest forest) {
  std::unordered_map<VertexId, std::vector<VertexId>> incident;
  for (const Edge& e : forest.edges) {
    incident[e.u].push_back(e.v);
    incident[e.v].push_back(e.u);
  }
  RdsSample sample;
  sample.degrees.reserve(order.size());
  sample.alters.reserve(order.size());
  for (VertexId u : order) {
    const auto nbrs = g.neighbors(u);
    std::vector<VertexId> free(nbrs.begin(), nbrs.end());
    if (auto it = incident.find(u); it != incident.end()) {
      for (VertexId other : it->second) {
        auto pos = std::find(free.begin(), free.end(), other);
        if (pos == free.end()) {
          throw std::invalid_argument("observe: forest edge (" + std::to_string(u) + "," +
                                      std::to_string(other) + ") is not in the graph");
        }
        free.erase(pos);
      }
    }
    sample.degrees.push_back(nbrs.size());
    sample.alters.push_back(std::move(free));
  }
  sample.order = std::move(order);
  sample.forest = std::move(forest);
  return sample;
}

RdsSample observe_uniform(const MultiGraph& g, std::span<const VertexId> sample) {
  ReferralForest forest;
  for (VertexId v : sample) {
    forest.seeds.push_back(v);
    forest.seed_of[v] = v;
  }
  return observe(g, std::vector<VertexId>(sample.begin(), sample.end()), std::move(forest));
}

RdsSample rds_capture(const MultiGraph& g, const RdsConfig& config) {
  const std::size_t n = g.num_vertices();
  if (config.target > n) {
    throw std::invalid_argument("rds_capture: target " + std::to_string(config.target) +
                                " exceeds population " + std::to_string(n));
  }
  const std::size_t num_seeds =
      config.initial_seeds.empty() ? config.num_seeds : config.initial_seeds.size();
  if (num_seeds == 0 || num_seeds > config.target) {
    throw std::invalid_argument("rds_capture: seed count must lie in [1, target]");
  }
  if (config.recruit_law.outcomes.empty()) {
    throw std::invalid_argument("rds_capture: empty recruit law");
  }

  Rng rng = make_rng(config.seed);
  std::vector<double> weights;
  for (const auto& outcome : config.recruit_law.outcomes) weights.push_back(outcome.second);
  std::discrete_distribution<std::size_t> recruit_count(weights.begin(), weights.end());

  std::vector<char> in_sample(n, 0);
  std::vector<VertexId> order;
  std::vector<VertexId> frontier;
  ReferralForest forest;
  SparseShuffle fresh(n);

  auto add_seed = [&](VertexId v) {
    in_sample[v] = 1;
    order.push_back(v);
    frontier.push_back(v);
    forest.seeds.push_back(v);
    forest.seed_of[v] = v;
  };

  if (config.initial_seeds.empty()) {
    for (std::size_t i = 0; i < num_seeds; ++i) add_seed(fresh.next(rng));
  } else {
    for (VertexId v : config.initial_seeds) {
      if (v >= n || in_sample[v]) {
        throw std::invalid_argument("rds_capture: invalid or repeated initial seed");
      }
      add_seed(v);
    }
  }

  std::vector<VertexId> candidates;
  while (order.size() < config.target) {
    if (frontier.empty()) {
      // Reseed uniformly from V \ S. `fresh` may hand back vertices that were
      // recruited meanwhile; skip those.
      VertexId v = 0;
      do {
        v = fresh.next(rng);
      } while (in_sample[v]);
      add_seed(v);
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    const std::size_t slot = pick(rng);
    const VertexId x = frontier[slot];
    frontier[slot] = frontier.back();
    frontier.pop_back();

    candidates.clear();
    for (VertexId v : g.neighbors(x)) {
      if (!in_sample[v]) candidates.push_back(v);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) continue;

    const std::size_t wanted = config.recruit_law.outcomes[recruit_count(rng)].first;
    const std::size_t k = std::min(wanted, candidates.size());
    for (std::size_t i = 0; i < k; ++i) {
      std::uniform_int_distribution<std::size_t> choose(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[choose(rng)]);
      const VertexId recruit = candidates[i];
      in_sample[recruit] = 1;
      order.push_back(recruit);
      frontier.push_back(recruit);
      forest.edges.push_back({x, recruit});
      forest.seed_of[recruit] = forest.seed_of.at(x);
    }
  }
  return observe(g, std::move(order), std::move(forest));
}

}  // namespace netsize
