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

#include <cmath>
#include <optional>

namespace netsize {

/// Bisects a sign change of `f` on [lower, upper] down to adjacent doubles.
/// Requires f(lower) and f(upper) to have opposite signs (or one to be zero).
template <typename Function>
double bisect(Function f, double lower, double upper) {
  double f_lower = f(lower);
  if (f_lower == 0.0) return lower;
  const double f_upper = f(upper);
  if (f_upper == 0.0) return upper;
  const bool lower_positive = f_lower > 0.0;
  for (;;) {
    const double middle = lower + (upper - lower) / 2.0;
    // The interval has shrunk to one ULP.
    if (middle <= lower || middle >= upper) {
      return std::abs(f_lower) <= std::abs(f(upper)) ? lower : upper;
    }
    const double f_middle = f(middle);
    if (f_middle == 0.0) return middle;
    if ((f_middle > 0.0) == lower_positive) {
      lower = middle;
      f_lower = f_middle;
    } else {
      upper = middle;
    }
  }
}

/// Root of g on [lower, +inf) when g(lower) > 0 and g eventually turns
/// negative: the upper end starts at `first_upper` and doubles until
/// g(upper) <= 0 or it passes `max_upper`. Returns nullopt when no sign change
/// is found or g is not finite at the lower end.
template <typename Function>
std::optional<double> bracket_and_bisect(Function g, double lower, double first_upper,
                                         double max_upper) {
  const double g_lower = g(lower);
  if (!std::isfinite(g_lower)) return std::nullopt;
  if (g_lower == 0.0) return lower;
  if (g_lower < 0.0) return std::nullopt;
  double upper = first_upper;
  while (true) {
    const double g_upper = g(upper);
    if (std::isnan(g_upper)) return std::nullopt;
    if (g_upper <= 0.0) break;
    if (upper > max_upper) return std::nullopt;
    lower = upper;
    upper *= 2.0;
  }
  const double root = bisect(g, lower, upper);
  if (!std::isfinite(root)) return std::nullopt;
  return root;
}

}  // namespace netsize
