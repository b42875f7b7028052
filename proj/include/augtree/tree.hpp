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

#include <optional>
#include <span>
#include <vector>

#include "augtree/types.hpp"

namespace augtree {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex to = 0;
  Cost cost = 0;
};

/// Edge-weighted tree on vertices 0..n-1, immutable after construction.
///
/// The constructor validates the structure: exactly n-1 edges, no self loops,
/// connected, non-negative costs and a total cost below kCostBudget. Any
/// violation throws std::invalid_argument.
class Tree {
 public:
  Tree() = default;
  Tree(Vertex n, std::vector<Edge> edges, std::optional<Vertex> root = std::nullopt);

  Vertex size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<Vertex> root() const { return root_; }
  Vertex root_or_default() const { return root_.value_or(0); }

  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

  bool has_edge(Vertex u, Vertex v) const;
  Cost total_cost() const { return total_cost_; }

  bool is_path() const;
  /// Vertices of a path in order, starting from the smaller-id endpoint.
  /// Throws std::invalid_argument when the tree is not a path.
  std::vector<Vertex> path_order() const;

  std::size_t leaf_count() const;
  /// Internal vertices of degree >= 3.
  std::vector<Vertex> branch_vertices() const;
  /// Every vertex has at most two children when rooted at root_or_default().
  bool is_binary() const;

  Tree with_root(Vertex r) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.root_ == b.root_;
  }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::optional<Vertex> root_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adj_;
  std::vector<std::uint64_t> edge_keys_;  // sorted
  Cost total_cost_ = 0;
};

inline std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

}  // namespace augtree
