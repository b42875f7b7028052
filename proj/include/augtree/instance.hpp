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
#include <optional>
#include <vector>

#include "augtree/cost_oracle.hpp"
#include "augtree/tree.hpp"

namespace augtree {

struct Shortcut {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 0;

  friend auto operator<=>(const Shortcut&, const Shortcut&) = default;
};

using ShortcutSet = std::vector<Shortcut>;

/// A k-DOAT instance: tree T embedded in the oracle's cost space, budget k.
struct Instance {
  Tree tree;
  CostOracle oracle;
  int k = 1;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.k == b.k && a.tree == b.tree && a.oracle == b.oracle;
  }
};

/// Sizes agree, k >= 1, and for metric oracles every tree edge is priced
/// exactly as the oracle prices it. Throws std::invalid_argument.
void validate_instance(const Instance& inst);

/// Endpoints valid and distinct, no duplicates, |S| <= k, and (unless
/// generalized) no shortcut parallel to a tree edge. Throws
/// std::invalid_argument.
void validate_shortcuts(const Tree& tree, const ShortcutSet& s, int k, bool generalized = false);

/// Shortcut with endpoints ordered u < v and the cost looked up (counted).
Shortcut make_shortcut(CostOracle& oracle, Vertex u, Vertex v);

enum class RandomFamily { kRandomL1, kPathL1 };

/// Points uniform on [0, 2^16)^2 with L1 costs; the tree is a random
/// recursive tree (or the path 0-1-...-n-1) priced by the oracle.
/// Deterministic in seed.
Instance gen_random(Vertex n, int k, std::uint64_t seed, RandomFamily family = RandomFamily::kRandomL1);

struct MetricViolation {
  Vertex u = 0;
  Vertex w = 0;
  Vertex v = 0;  // c(u,v) > c(u,w) + c(w,v)
  friend bool operator==(const MetricViolation&, const MetricViolation&) = default;
};

struct MetricCheck {
  bool ok = true;
  std::optional<MetricViolation> violation;
};

/// Checks all triples of distinct vertices among the first n.
MetricCheck verify_metric(const CostOracle& oracle, Vertex n);
/// Checks `samples` random triples of distinct vertices.
MetricCheck verify_metric_sampled(const CostOracle& oracle, Vertex n, std::uint64_t samples,
                                  std::uint64_t seed);

}  // namespace augtree
