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

// Small graphs shared by the unit tests.

#pragma once

#include <vector>

#include "netsize/graph.hpp"

namespace netsize::fixtures {

/// 4-cycle 1-2-3-4-1; vertex 0 is isolated so labels match the hand traces.
inline MultiGraph cycle4() { return MultiGraph(5, std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }

inline MultiGraph triangle() { return MultiGraph(3, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}); }

/// Center 0 with leaves 1, 2, 3.
inline MultiGraph star3() { return MultiGraph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}); }

inline ReferralForest forest(std::vector<Edge> edges, std::vector<VertexId> seeds,
                             std::vector<std::pair<VertexId, VertexId>> membership) {
  ReferralForest f;
  f.edges = std::move(edges);
  f.seeds = std::move(seeds);
  for (auto [v, s] : membership) f.seed_of[v] = s;
  return f;
}

}  // namespace netsize::fixtures
