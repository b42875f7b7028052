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

#include "augtree/instance.hpp"

#include <random>
#include <unordered_set>

namespace augtree {

void validate_instance(const Instance& inst) {
  if (inst.k < 1) throw std::invalid_argument("k must be >= 1");
  if (inst.tree.size() != inst.oracle.size()) throw std::invalid_argument("tree and oracle sizes differ");
  if (!inst.oracle.is_metric()) return;
  for (const Edge& e : inst.tree.edges()) {
    if (inst.oracle.peek(e.u, e.v) != e.cost) {
      throw std::invalid_argument("tree edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") cost differs from the oracle");
    }
  }
}

void validate_shortcuts(const Tree& tree, const ShortcutSet& s, int k, bool generalized) {
  if (static_cast<int>(s.size()) > k) throw std::invalid_argument("more than k shortcuts");
  std::unordered_set<std::uint64_t> seen;
  for (const Shortcut& e : s) {
    if (e.u < 0 || e.v < 0 || e.u >= tree.size() || e.v >= tree.size()) {
      throw std::invalid_argument("shortcut endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("shortcut endpoints must differ");
    if (e.cost < 0) throw std::invalid_argument("negative shortcut cost");
    if (!seen.insert(pair_key(e.u, e.v)).second) throw std::invalid_argument("duplicate shortcut");
    if (!generalized && tree.has_edge(e.u, e.v)) throw std::invalid_argument("shortcut parallel to a tree edge");
  }
}

Shortcut make_shortcut(CostOracle& oracle, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return {u, v, oracle.cost(u, v)};
}

Instance gen_random(Vertex n, int k, std::uint64_t seed, RandomFamily family) {
  if (n < 2) throw std::invalid_argument("gen_random needs n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, (std::int64_t{1} << 16) - 1);
  std::vector<Point> points(n);
  for (Point& p : points) {
    p.x = coord(rng);
    p.y = coord(rng);
  }
  CostOracle oracle = CostOracle::l1_points(std::move(points));
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v = 1; v < n; ++v) {
    Vertex parent = v - 1;
    if (family == RandomFamily::kRandomL1) {
      parent = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    }
    edges.push_back({parent, v, oracle.peek(parent, v)});
  }
  return Instance{Tree(n, std::move(edges)), std::move(oracle), k};
}

namespace {

bool violates(const CostOracle& o, Vertex u, Vertex w, Vertex v) {
  return o.peek(u, v) > o.peek(u, w) + o.peek(w, v);
}

}  // namespace

MetricCheck verify_metric(const CostOracle& oracle, Vertex n) {
  if (n < 3) throw std::invalid_argument("verify_metric needs n >= 3");
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == u) continue;
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        if (violates(oracle, u, w, v)) return {false, MetricViolation{u, w, v}};
      }
    }
  }
  return {};
}

MetricCheck verify_metric_sampled(const CostOracle& oracle, Vertex n, std::uint64_t samples,
                                  std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("verify_metric needs n >= 3");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Vertex u = pick(rng), w = pick(rng), v = pick(rng);
    while (w == u) w = pick(rng);
    while (v == u || v == w) v = pick(rng);
    if (violates(oracle, u, w, v)) return {false, MetricViolation{u, w, v}};
  }
  return {};
}

}  // namespace augtree
