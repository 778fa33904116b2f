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

#include "netsize/anonymity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "netsize/root_finding.hpp"

namespace netsize {

HashSpace HashSpace::telefunken(std::size_t k) {
  if (k == 0 || k > 31) throw std::invalid_argument("telefunken: digits must lie in [1, 31]");
  return {std::uint64_t{1} << (2 * k), HashMode::Telefunken, k};
}

Code telefunken_encode(std::string_view digits, std::size_t k) {
  if (k == 0 || k > 31) throw std::invalid_argument("telefunken_encode: k must lie in [1, 31]");
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument(std::string("telefunken_encode: non-digit '") + c + "'");
    }
  }
  if (digits.size() < k) {
    throw std::invalid_argument("telefunken_encode: need at least " + std::to_string(k) +
                                " digits");
  }
  Code code = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const int digit = digits[digits.size() - 1 - i] - '0';
    code = (code << 2) | (static_cast<Code>(digit % 2) << 1) | static_cast<Code>(digit >= 5);
  }
  return code;
}

std::vector<Code> assign_hashes(std::size_t n, const HashSpace& space, Rng& rng) {
  if (space.size == 0) throw std::invalid_argument("assign_hashes: empty hash space");
  std::vector<Code> codes(n);
  switch (space.mode) {
    case HashMode::RandomFunction: {
      std::uniform_int_distribution<Code> draw(0, space.size - 1);
      for (auto& c : codes) c = draw(rng);
      break;
    }
    case HashMode::Injective: {
      if (space.size < n) {
        throw std::invalid_argument("assign_hashes: injective assignment needs |Ω| >= n");
      }
      if (space.size <= 4 * static_cast<std::uint64_t>(n)) {
        std::vector<Code> pool(space.size);
        for (Code c = 0; c < space.size; ++c) pool[c] = c;
        for (std::size_t i = 0; i < n; ++i) {
          std::uniform_int_distribution<std::size_t> draw(i, pool.size() - 1);
          std::swap(pool[i], pool[draw(rng)]);
          codes[i] = pool[i];
        }
      } else {
        std::uniform_int_distribution<Code> draw(0, space.size - 1);
        std::unordered_set<Code> used;
        used.reserve(n);
        for (auto& c : codes) {
          do {
            c = draw(rng);
          } while (!used.insert(c).second);
        }
      }
      break;
    }
    case HashMode::Telefunken: {
      if (space.digits == 0 || space.size != (std::uint64_t{1} << (2 * space.digits))) {
        throw std::invalid_argument("assign_hashes: telefunken space must have 4^k codes");
      }
      std::uniform_int_distribution<int> digit(0, 9);
      std::string phone(space.digits, '0');
      for (auto& c : codes) {
        for (auto& ch : phone) ch = static_cast<char>('0' + digit(rng));
        c = telefunken_encode(phone, space.digits);
      }
      break;
    }
  }
  return codes;
}

namespace {

void add_into(Multiset<Code>& into, const Multiset<Code>& more) {
  for (const auto& [code, n] : more.counts()) into.insert(code, n);
}

}  // namespace

HashedSample::HashedSample(std::vector<HashedRespondent> respondents)
    : respondents_(std::move(respondents)) {
  for (const auto& r : respondents_) {
    num_components_ = std::max(num_components_, r.component + 1);
  }
  component_codes_.resize(num_components_);
  for (const auto& r : respondents_) {
    subject_codes_.insert(r.code);
    component_codes_[r.component].insert(r.code);
  }
  for (std::size_t c = 0; c < num_components_; ++c) {
    if (component_codes_[c].empty()) {
      throw std::invalid_argument("HashedSample: component " + std::to_string(c) +
                                  " has no respondents");
    }
  }
}

const Multiset<Code>& HashedSample::component_codes(std::size_t component) const {
  return component_codes_.at(component);
}

Multiset<Code> HashedSample::complement_codes(std::size_t component) const {
  return mdiff(subject_codes_, component_codes(component));
}

Multiset<Code> HashedSample::free_ends() const {
  Multiset<Code> out;
  for (const auto& r : respondents_) add_into(out, r.alters);
  return out;
}

Multiset<Code> HashedSample::free_ends(std::size_t component) const {
  Multiset<Code> out;
  for (const auto& r : respondents_) {
    if (r.component == component) add_into(out, r.alters);
  }
  return out;
}

Multiset<Code> HashedSample::matches() const {
  Multiset<Code> out;
  for (const auto& r : respondents_) add_into(out, mintersect(r.alters, subject_codes_));
  return out;
}

Multiset<Code> HashedSample::cross_seed_matches(std::size_t component) const {
  const Multiset<Code> others = complement_codes(component);
  Multiset<Code> out;
  for (const auto& r : respondents_) {
    if (r.component == component) add_into(out, mintersect(r.alters, others));
  }
  return out;
}

std::vector<std::size_t> HashedSample::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(respondents_.size());
  for (const auto& r : respondents_) out.push_back(r.degree);
  return out;
}

HashedSample hashed_view(const RdsSample& sample, std::span<const Code> assignment) {
  auto code_of = [&](VertexId v) {
    if (v >= assignment.size()) {
      throw std::invalid_argument("hashed_view: no code for vertex " + std::to_string(v));
    }
    return assignment[v];
  };
  std::map<VertexId, std::size_t> component_index;
  for (VertexId s : sample.forest.seeds) {
    component_index.emplace(s, component_index.size());
  }
  std::vector<HashedRespondent> respondents;
  respondents.reserve(sample.size());
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const VertexId u = sample.order[i];
    HashedRespondent r;
    r.code = code_of(u);
    if (auto recruiter = sample.recruiter_of(u)) r.recruiter_code = code_of(*recruiter);
    r.component = component_index.at(sample.forest.seed_of.at(u));
    r.degree = sample.degrees[i];
    for (VertexId v : sample.alters[i]) r.alters.insert(code_of(v));
    respondents.push_back(std::move(r));
  }
  return HashedSample(std::move(respondents));
}

double collision_prob(double n_prime, double omega, double harmonic_degree,
                      std::size_t holder_degree) {
  if (holder_degree <= 1) return 0.0;
  const double free_ends_at_holder = static_cast<double>(holder_degree) - 1.0;
  return 1.0 / ((n_prime - 1.0) / omega * harmonic_degree / free_ends_at_holder + 1.0);
}

namespace {

// Over respondents reporting at least one tie; 0 when there are none.
double harmonic_mean(std::span<const std::size_t> degrees) {
  double inverse_sum = 0.0;
  std::size_t connected = 0;
  for (std::size_t d : degrees) {
    if (d == 0) continue;
    ++connected;
    inverse_sum += 1.0 / static_cast<double>(d);
  }
  return connected == 0 ? 0.0 : static_cast<double>(connected) / inverse_sum;
}

// Degrees of the respondents holding each code.
using Holders = std::map<Code, std::vector<std::size_t>>;

// For each holder degree, how many (observed match, candidate holder) pairs
// involve a holder of that degree. m̂ and x̂ are linear in this profile.
using MatchProfile = std::map<std::size_t, double>;

void add_profile(MatchProfile& profile, const Multiset<Code>& observed,
                 const Holders& holders) {
  for (const auto& [code, occurrences] : observed.counts()) {
    auto it = holders.find(code);
    if (it == holders.end()) continue;
    for (std::size_t d : it->second) profile[d] += static_cast<double>(occurrences);
  }
}

// Extended precision keeps the sign of the fixed-point residual reliable one
// ULP away from the root, so bisection lands on the nearest double.
using Wide = long double;

Wide wide_collision_prob(double n_prime, double omega, double harmonic_degree,
                         std::size_t holder_degree) {
  if (holder_degree <= 1) return 0.0L;
  const Wide free_ends_at_holder = static_cast<Wide>(holder_degree) - 1.0L;
  return 1.0L / ((static_cast<Wide>(n_prime) - 1.0L) / static_cast<Wide>(omega) *
                     static_cast<Wide>(harmonic_degree) / free_ends_at_holder +
                 1.0L);
}

Wide evaluate(const MatchProfile& profile, double n_prime, double omega,
              double harmonic_degree) {
  Wide total = 0.0L;
  for (const auto& [d, weight] : profile) {
    total += static_cast<Wide>(weight) * wide_collision_prob(n_prime, omega, harmonic_degree, d);
  }
  return total;
}

Holders holders_where(const HashedSample& sample, std::optional<std::size_t> skip_component) {
  Holders holders;
  for (const auto& r : sample.respondents()) {
    if (skip_component && r.component == *skip_component) continue;
    holders[r.code].push_back(r.degree);
  }
  return holders;
}

MatchProfile match_profile(const HashedSample& sample) {
  MatchProfile profile;
  add_profile(profile, sample.matches(), holders_where(sample, std::nullopt));
  return profile;
}

MatchProfile cross_profile(const HashedSample& sample, std::size_t component) {
  MatchProfile profile;
  add_profile(profile, sample.cross_seed_matches(component), holders_where(sample, component));
  return profile;
}

struct DegreeSummary {
  double mean = 0.0;
  double harmonic = 0.0;
  bool degenerate = true;
};

// Same conventions as the plaintext estimators: respondents without ties are
// left out of d(S) and d~(S).
DegreeSummary summarize_degrees(const HashedSample& sample) {
  const auto degrees = sample.degrees();
  DegreeSummary out;
  double sum = 0.0;
  std::size_t connected = 0;
  for (std::size_t d : degrees) {
    if (d == 0) continue;
    ++connected;
    sum += static_cast<double>(d);
  }
  if (connected == 0) return out;
  out.mean = sum / static_cast<double>(connected);
  out.harmonic = harmonic_mean(degrees);
  out.degenerate = out.mean <= 1.0;
  return out;
}

constexpr double kMaxPopulation = 1e12;

EstimateResult solve(double numerator, const MatchProfile& profile, double omega,
                     double harmonic_degree, std::size_t sample_size) {
  auto excess = [&](double n_prime) {
    return static_cast<Wide>(numerator) / evaluate(profile, n_prime, omega, harmonic_degree) -
           static_cast<Wide>(n_prime);
  };
  const double lower = std::max(static_cast<double>(sample_size), 1.0);
  const auto root = bracket_and_bisect(excess, lower, 10.0 * lower, kMaxPopulation);
  if (!root || !std::isfinite(*root) || *root <= 0.0) {
    return EstimateResult::failure(FailureCause::NoRoot);
  }
  return EstimateResult::success(*root);
}

}  // namespace

double m_hat(const HashedSample& sample, double n_prime, double omega) {
  return static_cast<double>(
      evaluate(match_profile(sample), n_prime, omega, harmonic_mean(sample.degrees())));
}

double x_hat(const HashedSample& sample, std::size_t component, double n_prime,
             double omega) {
  if (component >= sample.num_components()) {
    throw std::invalid_argument("x_hat: no component " + std::to_string(component));
  }
  return static_cast<double>(evaluate(cross_profile(sample, component), n_prime, omega,
                                      harmonic_mean(sample.degrees())));
}

EstimateResult estimate_n2_psi(const HashedSample& sample, double omega) {
  const DegreeSummary degrees = summarize_degrees(sample);
  if (degrees.degenerate) return EstimateResult::failure(FailureCause::DegenerateDegrees);
  if (sample.matches().empty()) return EstimateResult::failure(FailureCause::ZeroMatches);
  const double numerator = (degrees.mean - 1.0) / degrees.harmonic *
                           static_cast<double>(sample.subject_codes().cardinality()) *
                           static_cast<double>(sample.free_ends().cardinality());
  return solve(numerator, match_profile(sample), omega, degrees.harmonic, sample.size());
}

EstimateResult estimate_n3_psi(const HashedSample& sample, double omega) {
  const std::size_t k = sample.num_components();
  if (k < 2) throw std::invalid_argument("estimate_n3_psi: needs at least two seeds");
  const DegreeSummary degrees = summarize_degrees(sample);
  if (degrees.degenerate) return EstimateResult::failure(FailureCause::DegenerateDegrees);

  std::vector<double> size(k, 0.0);
  std::vector<double> connected(k, 0.0);
  std::vector<double> degree_sum(k, 0.0);
  std::vector<double> free_ends(k, 0.0);
  double total_degree = 0.0;
  double total_connected = 0.0;
  for (const auto& r : sample.respondents()) {
    size[r.component] += 1.0;
    if (r.degree > 0) {
      connected[r.component] += 1.0;
      total_connected += 1.0;
    }
    degree_sum[r.component] += static_cast<double>(r.degree);
    free_ends[r.component] += static_cast<double>(r.alters.cardinality());
    total_degree += static_cast<double>(r.degree);
  }
  const auto total_size = static_cast<double>(sample.size());

  double numerator = 0.0;
  std::size_t observed_cross = 0;
  MatchProfile profile;
  for (std::size_t c = 0; c < k; ++c) {
    const double rest_size = total_size - size[c];
    const double rest_connected = total_connected - connected[c];
    if (rest_connected > 0.0) {
      const double rest_mean = (total_degree - degree_sum[c]) / rest_connected;
      numerator += (rest_mean - 1.0) / degrees.harmonic * rest_size * free_ends[c];
    }
    const Multiset<Code> cross = sample.cross_seed_matches(c);
    observed_cross += cross.cardinality();
    add_profile(profile, cross, holders_where(sample, c));
  }
  if (observed_cross == 0) return EstimateResult::failure(FailureCause::ZeroCrossMatches);
  return solve(numerator, profile, omega, degrees.harmonic, sample.size());
}

}  // namespace netsize
