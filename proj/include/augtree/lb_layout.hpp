// Copyright 2026 The augtree Authors
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

#include <vector>

#include "augtree/types.hpp"

namespace augtree {

/// Which member of the lower-bound family: the hard instance I, or I_{a,b}
/// where the single L2 x L3 pair (a,b) is made cheaper.
enum class LbVariant { kI, kIab };

struct LowerBoundParams {
  int n_star = 2;  // vertices per star (center + n_star-1 leaves)
  int k = 3;
  LbVariant variant = LbVariant::kI;
  Vertex a = kNoVertex;  // defaults to the first leaf of star 2
  Vertex b = kNoVertex;  // defaults to the first leaf of star 3

  friend bool operator==(const LowerBoundParams&, const LowerBoundParams&) = default;
};

/// Vertex numbering and closed-form costs of the four-star construction.
///
/// Star i (1-based) occupies ids (i-1)*n_star .. i*n_star-1 with its center
/// first. The six connector vertices follow: v1,u2,v2,u3,v3,u4. For k > 3 the
/// first k-3 leaves of star 1 form Z and hang from y, the first leaf of star 4.
class LbLayout {
 public:
  enum class Class : int { kX1, kX2, kX3, kX4, kV1, kU2, kV2, kU3, kV3, kU4, kL1, kL2, kL3, kL4 };

  /// Fills in default a/b and validates; throws std::invalid_argument.
  explicit LbLayout(LowerBoundParams params);

  const LowerBoundParams& params() const { return params_; }
  Vertex vertex_count() const { return 4 * params_.n_star + 6; }

  Vertex center(int i) const { return (i - 1) * params_.n_star; }
  Vertex leaf(int i, int j) const { return (i - 1) * params_.n_star + j; }  // j in 1..n_star-1
  Vertex v_connector(int i) const { return 4 * params_.n_star + 2 * (i - 1); }  // i in 1..3
  Vertex u_connector(int i) const { return 4 * params_.n_star + 2 * (i - 2) + 1; }  // i in 2..4
  Vertex a() const { return params_.a; }
  Vertex b() const { return params_.b; }
  Vertex y() const { return leaf(4, 1); }
  std::vector<Vertex> z_set() const;
  std::vector<Vertex> leaves(int i) const;

  Class class_of(Vertex v) const;

  /// Shortcut cost c(u,v) for u != v, O(1).
  Cost cost(Vertex u, Vertex v) const;

 private:
  LowerBoundParams params_;
};

}  // namespace augtree
