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

#include "augtree/static_tree_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace augtree {

StaticTreeIndex::StaticTreeIndex(const Tree& tree) : root_(tree.root_or_default()) {
  const Vertex n = tree.size();
  parent_.assign(n, kNoVertex);
  depth_.assign(n, 0);
  dist_.assign(n, 0);
  tin_.assign(n, 0);
  tout_.assign(n, 0);
  order_.reserve(n);

  // Iterative preorder DFS.
  std::vector<std::pair<Vertex, std::size_t>> stack;
  stack.emplace_back(root_, 0);
  tin_[root_] = 0;
  order_.push_back(root_);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto nbs = tree.neighbors(v);
    if (next == nbs.size()) {
      tout_[v] = static_cast<std::int32_t>(order_.size());
      stack.pop_back();
      continue;
    }
    const Neighbor nb = nbs[next++];
    if (nb.to == parent_[v]) continue;
    parent_[nb.to] = v;
    depth_[nb.to] = depth_[v] + 1;
    dist_[nb.to] = dist_[v] + nb.cost;
    tin_[nb.to] = static_cast<std::int32_t>(order_.size());
    order_.push_back(nb.to);
    stack.emplace_back(nb.to, 0);
  }

  log2_.assign(n + 1, 0);
  for (Vertex i = 2; i <= n; ++i) log2_[i] = static_cast<std::int8_t>(log2_[i / 2] + 1);

  // Position i holds parent(order[i]); position 0 (the root) is never queried.
  sparse_.emplace_back(n);
  for (Vertex i = 0; i < n; ++i) sparse_[0][i] = i == 0 ? root_ : parent_[order_[i]];
  for (int j = 1; (Vertex{1} << j) <= n; ++j) {
    const auto& prev = sparse_[j - 1];
    std::vector<Vertex> cur(n - (Vertex{1} << j) + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = shallower(prev[i], prev[i + (std::size_t{1} << (j - 1))]);
    sparse_.push_back(std::move(cur));
  }

  // Jump pointers.
  const std::int32_t max_depth = n ? *std::max_element(depth_.begin(), depth_.end()) : 0;
  jump_.emplace_back(parent_);
  for (int j = 1; (std::int32_t{1} << j) <= max_depth; ++j) {
    const auto& prev = jump_[j - 1];
    std::vector<Vertex> cur(n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) cur[v] = prev[v] == kNoVertex ? kNoVertex : prev[prev[v]];
    jump_.push_back(std::move(cur));
  }

  // Long-path decomposition; each path of length L is extended upwards by L.
  std::vector<std::int32_t> height(n, 0);
  std::vector<Vertex> tall_child(n, kNoVertex);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Vertex v = *it;
    const Vertex p = parent_[v];
    if (p != kNoVertex && (tall_child[p] == kNoVertex || height[v] + 1 > height[p])) {
      height[p] = height[v] + 1;
      tall_child[p] = v;
    }
  }
  ladder_pos_.assign(n, 0);
  std::vector<std::size_t> ladder_base(n, 0);
  ladder_.reserve(2 * static_cast<std::size_t>(n));
  std::vector<Vertex> path;
  for (Vertex top : order_) {
    if (parent_[top] != kNoVertex && tall_child[parent_[top]] == top) continue;
    path.clear();
    for (Vertex v = top; v != kNoVertex; v = tall_child[v]) path.push_back(v);
    std::vector<Vertex> above;
    for (Vertex a = parent_[top]; a != kNoVertex && above.size() < path.size(); a = parent_[a]) above.push_back(a);
    const std::size_t base = ladder_.size();
    ladder_.insert(ladder_.end(), above.rbegin(), above.rend());
    for (std::size_t i = 0; i < path.size(); ++i) {
      ladder_base[path[i]] = base;
      ladder_pos_[path[i]] = static_cast<std::int32_t>(above.size() + i);
    }
    ladder_.insert(ladder_.end(), path.begin(), path.end());
  }
  // Store absolute positions.
  for (Vertex v = 0; v < n; ++v) ladder_pos_[v] += static_cast<std::int32_t>(ladder_base[v]);
}

Vertex StaticTreeIndex::lca(Vertex u, Vertex v) const {
  if (u == v) return u;
  std::int32_t a = tin_[u], b = tin_[v];
  if (a > b) std::swap(a, b);
  ++a;  // range (tin[u], tin[v]]
  const int j = log2_[b - a + 1];
  return shallower(sparse_[j][a], sparse_[j][b - (std::int32_t{1} << j) + 1]);
}

Vertex StaticTreeIndex::level_ancestor(Vertex v, std::int32_t hops) const {
  if (hops < 0 || hops > depth_[v]) throw std::out_of_range("level ancestor above the root");
  if (hops == 0) return v;
  const int j = std::bit_width(static_cast<std::uint32_t>(hops)) - 1;
  const Vertex u = jump_[j][v];
  const std::int32_t rest = hops - (std::int32_t{1} << j);
  return ladder_[ladder_pos_[u] - rest];
}

Dist StaticTreeIndex::dist_hops(Vertex u, Vertex v) const {
  const Vertex w = lca(u, v);
  return {dist_[u] + dist_[v] - 2 * dist_[w], depth_[u] + depth_[v] - 2 * static_cast<std::int64_t>(depth_[w])};
}

Vertex StaticTreeIndex::path_vertex(Vertex u, Vertex v, std::int64_t i) const {
  const Vertex w = lca(u, v);
  const std::int64_t up = depth_[u] - depth_[w];
  const std::int64_t hops = up + depth_[v] - depth_[w];
  if (i < 1 || i > hops + 1) throw std::out_of_range("path index out of range");
  if (i - 1 <= up) return level_ancestor(u, static_cast<std::int32_t>(i - 1));
  return level_ancestor(v, static_cast<std::int32_t>(hops - (i - 1)));
}

}  // namespace augtree
