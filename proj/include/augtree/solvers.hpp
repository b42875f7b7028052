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

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "augtree/diameter.hpp"
#include "augtree/instance.hpp"

namespace augtree {

/// Bookkeeping of the (1+eps) scheme.
struct PtasStats {
  double eps = 0;
  int eta = 0;               // target size of V'
  int branch_count = 0;      // |B|
  int reduced_vertices = 0;  // |V'|
  std::size_t leaves = 0;    // lambda
  double leaf_guard = 0;     // n^(1/(2k+2)^2)
  bool certified = false;    // n > (12 lambda (k+2)^2 / eps)^(2k+2)
};

struct SolveResult {
  std::string algo;
  ShortcutSet shortcuts;
  Cost diam = 0;
  Vertex witness_u = kNoVertex;
  Vertex witness_v = kNoVertex;
  std::uint64_t oracle_queries = 0;
  std::chrono::nanoseconds elapsed{0};
  std::optional<PtasStats> ptas;

  std::string to_json() const;
};

struct GonzalezResult {
  std::vector<Vertex> picks;
  /// radii[i]: distance from picks[i] to the nearest earlier pick (0 for i = 0).
  std::vector<Cost> radii;
};

/// Farthest-first traversal in T: picks[0] = start, then repeatedly the
/// vertex farthest from all picks so far. O(n + h^2 log n).
/// Throws std::invalid_argument unless 1 <= h <= n.
GonzalezResult gonzalez(const Tree& tree, int h, Vertex start = 0);

struct ExactOptions {
  bool generalized = false;  // allow shortcuts parallel to tree edges
  double budget = 1e10;      // refuse above this many estimated basic steps
  int threads = 1;
};

/// Estimated work of exact enumeration: sum_j C(pairs, j) * n * k * log2(n)
/// over j = 0..min(k, pairs).
double exact_work_estimate(Vertex n, std::uint64_t pairs, int k);

/// Optimal k-DOAT by enumerating every set of at most k candidate pairs.
/// Ties prefer fewer shortcuts, then the lexicographically smallest list.
/// Throws BudgetExceeded when the estimate exceeds options.budget.
SolveResult exact_doat(Instance& inst, const ExactOptions& options = {});

/// Star from the first farthest-first pick to the next k picks.
SolveResult approx4(Instance& inst, Vertex start = 0);

/// Contracted instance on V' = B plus farthest-first picks.
struct ReducedInstance {
  Tree tree;                       // over 0..|V'|-1, costs are tree distances
  std::vector<Vertex> to_original;  // local id -> vertex of the input tree
  std::vector<Cost> shortcut_cost;  // |V'| x |V'| row-major c'(u,v)
  int k = 1;
  PtasStats stats;
};

/// Throws Error when eta > n.
ReducedInstance build_reduced(Instance& inst, double eps, Vertex start = 0);

/// Plain instance equivalent to the generalized reduced one: every T' edge
/// (u,v,chi) becomes u -0- s -chi- v with a new vertex s, and every shortcut
/// touching a split vertex is priced prohibitively. Vertices 0..|V'|-1 keep
/// their ids; split vertices follow.
Instance split_generalized(const ReducedInstance& reduced);

SolveResult ptas(Instance& inst, double eps, const ExactOptions& options = {}, Vertex start = 0);

}  // namespace augtree
