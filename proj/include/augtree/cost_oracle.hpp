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

#include <cstdint>
#include <unordered_set>
#include <variant>
#include <vector>

#include "augtree/lb_layout.hpp"
#include "augtree/types.hpp"

namespace augtree {

enum class OracleKind { kExplicit, kL1, kLowerBound };

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Pair-cost function c(u,v) with a look-up counter.
///
/// cost() is the counted access path used by algorithms; every call bumps
/// query_count() by one, repeats included. peek() is uncounted and reserved
/// for validation and serialization. Copies carry their own counter.
class CostOracle {
 public:
  /// Row-major symmetric n x n matrix with zero diagonal and non-negative
  /// entries; throws std::invalid_argument otherwise.
  static CostOracle explicit_matrix(Vertex n, std::vector<Cost> matrix);
  static CostOracle l1_points(std::vector<Point> points);
  static CostOracle lower_bound(const LowerBoundParams& params);

  OracleKind kind() const;
  Vertex size() const { return n_; }
  /// l1 and lower-bound oracles are metric by construction.
  bool is_metric() const { return kind() != OracleKind::kExplicit; }

  Cost cost(Vertex u, Vertex v);
  Cost peek(Vertex u, Vertex v) const;

  std::uint64_t query_count() const { return queries_; }
  void reset_query_count() { queries_ = 0; }

  /// Records every distinct unordered pair passed to cost().
  void set_query_log(bool enabled);
  bool was_queried(Vertex u, Vertex v) const;

  const std::vector<Cost>& matrix() const { return std::get<std::vector<Cost>>(payload_); }
  const std::vector<Point>& points() const { return std::get<std::vector<Point>>(payload_); }
  const LbLayout& lb_layout() const { return std::get<LbLayout>(payload_); }

  /// Same kind and payload; counters are ignored.
  friend bool operator==(const CostOracle& a, const CostOracle& b);

 private:
  CostOracle(Vertex n, std::variant<std::vector<Cost>, std::vector<Point>, LbLayout> payload)
      : n_(n), payload_(std::move(payload)) {}

  Vertex n_ = 0;
  std::variant<std::vector<Cost>, std::vector<Point>, LbLayout> payload_;
  std::uint64_t queries_ = 0;
  bool log_enabled_ = false;
  std::unordered_set<std::uint64_t> log_;
};

}  // namespace augtree
