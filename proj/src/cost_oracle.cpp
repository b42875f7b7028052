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

#include "augtree/cost_oracle.hpp"

#include <cstdlib>

#include "augtree/tree.hpp"

namespace augtree {

CostOracle CostOracle::explicit_matrix(Vertex n, std::vector<Cost> matrix) {
  if (n < 1 || matrix.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("cost matrix must be n x n");
  }
  for (Vertex u = 0; u < n; ++u) {
    if (matrix[static_cast<std::size_t>(u) * n + u] != 0) throw std::invalid_argument("cost matrix diagonal must be 0");
    for (Vertex v = u + 1; v < n; ++v) {
      const Cost c = matrix[static_cast<std::size_t>(u) * n + v];
      if (c < 0) throw std::invalid_argument("negative cost in matrix");
      if (c != matrix[static_cast<std::size_t>(v) * n + u]) throw std::invalid_argument("cost matrix not symmetric");
    }
  }
  return CostOracle(n, std::move(matrix));
}

CostOracle CostOracle::l1_points(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("no points");
  const auto n = static_cast<Vertex>(points.size());
  return CostOracle(n, std::move(points));
}

CostOracle CostOracle::lower_bound(const LowerBoundParams& params) {
  LbLayout layout(params);
  const Vertex n = layout.vertex_count();
  return CostOracle(n, std::move(layout));
}

OracleKind CostOracle::kind() const {
  switch (payload_.index()) {
    case 0:
      return OracleKind::kExplicit;
    case 1:
      return OracleKind::kL1;
    default:
      return OracleKind::kLowerBound;
  }
}

Cost CostOracle::peek(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("oracle vertex out of range");
  if (u == v) return 0;
  switch (payload_.index()) {
    case 0:
      return std::get<0>(payload_)[static_cast<std::size_t>(u) * n_ + v];
    case 1: {
      const auto& p = std::get<1>(payload_);
      return std::llabs(p[u].x - p[v].x) + std::llabs(p[u].y - p[v].y);
    }
    default:
      return std::get<2>(payload_).cost(u, v);
  }
}

Cost CostOracle::cost(Vertex u, Vertex v) {
  const Cost c = peek(u, v);
  ++queries_;
  if (log_enabled_) log_.insert(pair_key(u, v));
  return c;
}

void CostOracle::set_query_log(bool enabled) {
  log_enabled_ = enabled;
  if (!enabled) log_.clear();
}

bool CostOracle::was_queried(Vertex u, Vertex v) const { return log_.contains(pair_key(u, v)); }

bool operator==(const CostOracle& a, const CostOracle& b) {
  if (a.n_ != b.n_ || a.payload_.index() != b.payload_.index()) return false;
  switch (a.payload_.index()) {
    case 0:
      return std::get<0>(a.payload_) == std::get<0>(b.payload_);
    case 1:
      return std::get<1>(a.payload_) == std::get<1>(b.payload_);
    default:
      return std::get<2>(a.payload_).params() == std::get<2>(b.payload_).params();
  }
}

}  // namespace augtree
