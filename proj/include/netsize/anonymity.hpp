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
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netsize/estimators.hpp"
#include "netsize/multiset.hpp"
#include "netsize/random.hpp"
#include "netsize/sampling.hpp"

namespace netsize {

/// Anonymised identity code.
using Code = std::uint64_t;

enum class HashMode { RandomFunction, Injective, Telefunken };

struct HashSpace {
  std::uint64_t size = 1;
  HashMode mode = HashMode::RandomFunction;
  /// Phone digits encoded per code; only meaningful for Telefunken.
  std::size_t digits = 0;

  static HashSpace random_function(std::uint64_t size) { return {size, HashMode::RandomFunction, 0}; }
  static HashSpace injective(std::uint64_t size) { return {size, HashMode::Injective, 0}; }
  /// 4^k codes.
  static HashSpace telefunken(std::size_t k);
};

/// Code for each vertex 0..n-1.
///
/// RandomFunction draws i.i.d. uniform codes, Injective draws distinct codes,
/// and Telefunken encodes k uniformly random decimal digits per vertex.
/// Throws std::invalid_argument for an empty space, Injective with fewer codes
/// than vertices, or a Telefunken space whose size is not 4^k.
std::vector<Code> assign_hashes(std::size_t n, const HashSpace& space, Rng& rng);

/// Encodes the last k digits, last to first, as (odd?, 5-9?) bit pairs; the
/// first pair produced lands in the most significant position. "27" with
/// k = 2 gives 0b1100. Throws std::invalid_argument on a non-digit character
/// or fewer than k digits.
Code telefunken_encode(std::string_view digits, std::size_t k);

/// One interview in code form.
struct HashedRespondent {
  Code code = 0;
  std::optional<Code> recruiter_code;
  /// Referral tree index, 0..num_components-1.
  std::size_t component = 0;
  std::size_t degree = 0;
  /// N^ψ(u,F): codes of the non-referral ties.
  Multiset<Code> alters;
};

/// The anonymised view of a respondent-driven sample: codes only.
class HashedSample {
 public:
  HashedSample() = default;
  /// Throws std::invalid_argument if component labels are not 0..k-1 with
  /// every label used.
  explicit HashedSample(std::vector<HashedRespondent> respondents);

  const std::vector<HashedRespondent>& respondents() const { return respondents_; }
  std::size_t size() const { return respondents_.size(); }
  std::size_t num_components() const { return num_components_; }

  /// S^ψ
  const Multiset<Code>& subject_codes() const { return subject_codes_; }
  /// C^ψ(c)
  const Multiset<Code>& component_codes(std::size_t component) const;
  /// C~^ψ(c): codes of every respondent outside component c.
  Multiset<Code> complement_codes(std::size_t component) const;

  /// R^ψ(S,F)
  Multiset<Code> free_ends() const;
  /// R^ψ(C(c),F)
  Multiset<Code> free_ends(std::size_t component) const;
  /// M^ψ(S,F) = ⨿ N^ψ(u,F) ∩ S^ψ
  Multiset<Code> matches() const;
  /// X^ψ(c) = ⨿_{u in C(c)} N^ψ(u,F) ∩ C~^ψ(c)
  Multiset<Code> cross_seed_matches(std::size_t component) const;

  /// Reported degrees in respondent order.
  std::vector<std::size_t> degrees() const;

 private:
  std::vector<HashedRespondent> respondents_;
  std::size_t num_components_ = 0;
  Multiset<Code> subject_codes_;
  std::vector<Multiset<Code>> component_codes_;
};

/// Replaces identities by codes. Components are numbered in seed discovery
/// order. Throws std::invalid_argument if a sampled vertex or alter has no
/// code.
HashedSample hashed_view(const RdsSample& sample, std::span<const Code> assignment);

/// Probability that the sampled holder w of a matched code is the true alter:
/// 1 / ((n'-1)/|Ω| * d~(S)/(d(w)-1) + 1), and 0 when d(w) <= 1.
double collision_prob(double n_prime, double omega, double harmonic_degree,
                      std::size_t holder_degree);

/// Expected number of true matches among the observed ψ-matches under a
/// hypothetical population size n'.
double m_hat(const HashedSample& sample, double n_prime, double omega);

/// Expected number of true cross-seed matches from tree `component`.
double x_hat(const HashedSample& sample, std::size_t component, double n_prime,
             double omega);

/// Fixed point of n' = [(d(S)-1)/d~(S)] |S| <R^ψ> / m̂(n').
EstimateResult estimate_n2_psi(const HashedSample& sample, double omega);

/// Fixed point of the cross-seed analogue with x̂ in the denominator.
/// Throws std::invalid_argument with fewer than two components.
EstimateResult estimate_n3_psi(const HashedSample& sample, double omega);

}  // namespace netsize
