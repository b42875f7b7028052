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

#include <span>
#include <vector>

#include "augtree/tree.hpp"

namespace augtree {

/// Constant-time tree queries after O(n log n) preprocessing.
///
/// LCA uses a sparse table over the preorder (range-minimum of parent depth);
/// level ancestors use jump pointers plus long-path ladders.
class StaticTreeIndex {
 public:
  StaticTreeIndex() = default;
  /// Rooted at tree.root_or_default().
  explicit StaticTreeIndex(const Tree& tree);

  Vertex size() const { return static_cast<Vertex>(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }  // kNoVertex for the root
  std::int32_t depth_hops(Vertex v) const { return depth_[v]; }
  Cost dist_to_root(Vertex v) const { return dist_[v]; }
  /// Cost of the edge from v to its parent (0 for the root).
  Cost parent_edge_cost(Vertex v) const { return v == root_ ? 0 : dist_[v] - dist_[parent_[v]]; }
  std::span<const Vertex> preorder() const { return order_; }

  bool is_ancestor(Vertex a, Vertex v) const {  // a == v counts
    return tin_[a] <= tin_[v] && tin_[v] < tout_[a];
  }

  Vertex lca(Vertex u, Vertex v) const;
  /// Ancestor of v at hop distance `hops`; std::out_of_range if too far.
  Vertex level_ancestor(Vertex v, std::int32_t hops) const;
  Dist dist_hops(Vertex u, Vertex v) const;
  /// i-th vertex (1-based) on the u -> v path; std::out_of_range unless
  /// 1 <= i <= hops(u,v) + 1.
  Vertex path_vertex(Vertex u, Vertex v, std::int64_t i) const;

 private:
  Vertex shallower(Vertex a, Vertex b) const { return depth_[a] <= depth_[b] ? a : b; }

  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::int32_t> depth_;
  std::vector<Cost> dist_;
  std::vector<Vertex> order_;
  std::vector<std::int32_t> tin_, tout_;

  // sparse_[j][i] = shallowest parent among preorder positions [i, i + 2^j).
  std::vector<std::vector<Vertex>> sparse_;
  std::vector<std::int8_t> log2_;

  std::vector<std::vector<Vertex>> jump_;  // jump_[j][v] = 2^j-th ancestor
  std::vector<Vertex> ladder_;             // concatenated ladders, top to bottom
  std::vector<std::int32_t> ladder_pos_;   // position of v inside its own ladder
};

}  // namespace augtree
