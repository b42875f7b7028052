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

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace augtree {

using Vertex = std::int32_t;
using Cost = std::int64_t;

inline constexpr Vertex kNoVertex = -1;

// Upper bound (exclusive) on the sum of all tree edge costs.
inline constexpr Cost kCostBudget = Cost{1} << 62;

/// Path length measured both in cost and in edge count.
struct Dist {
  Cost cost = 0;
  std::int64_t hops = 0;

  friend constexpr Dist operator+(Dist a, Dist b) {
    return {a.cost + b.cost, a.hops + b.hops};
  }
  friend constexpr Dist operator-(Dist a, Dist b) {
    return {a.cost - b.cost, a.hops - b.hops};
  }
  friend constexpr auto operator<=>(const Dist&, const Dist&) = default;
};

/// Tie-broken distance (cost, hops, owner), compared lexicographically.
/// Adding a scalar moves only the cost component.
struct TieDist {
  Cost cost = 0;
  std::int64_t hops = 0;
  Vertex owner = kNoVertex;

  friend constexpr auto operator<=>(const TieDist&, const TieDist&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed its configured work budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace augtree
