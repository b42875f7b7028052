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

#include "augtree/tree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace augtree {

namespace {

Vertex find(std::vector<Vertex>& uf, Vertex x) {
  while (uf[x] != x) {
    uf[x] = uf[uf[x]];
    x = uf[x];
  }
  return x;
}

}  // namespace

Tree::Tree(Vertex n, std::vector<Edge> edges, std::optional<Vertex> root)
    : n_(n), edges_(std::move(edges)), root_(root) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  if (edges_.size() != static_cast<std::size_t>(n - 1)) {
    throw std::invalid_argument("edge count: expected " + std::to_string(n - 1) + ", got " +
                                std::to_string(edges_.size()));
  }
  if (root_ && (*root_ < 0 || *root_ >= n)) throw std::invalid_argument("root out of range");

  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::vector<std::size_t> deg(n + 1, 0);
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::invalid_argument("vertex id out of range");
    if (e.u == e.v) throw std::invalid_argument("self loop");
    if (e.cost < 0) throw std::invalid_argument("negative cost");
    if (e.cost >= kCostBudget - total_cost_) throw std::invalid_argument("total cost exceeds 2^62");
    total_cost_ += e.cost;
    Vertex a = find(uf, e.u), b = find(uf, e.v);
    if (a == b) throw std::invalid_argument("edges contain a cycle");
    uf[a] = b;
    ++deg[e.u];
    ++deg[e.v];
  }

  offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  edge_keys_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    adj_[fill[e.u]++] = {e.v, e.cost};
    adj_[fill[e.v]++] = {e.u, e.cost};
    edge_keys_.push_back(pair_key(e.u, e.v));
  }
  std::sort(edge_keys_.begin(), edge_keys_.end());
}

bool Tree::has_edge(Vertex u, Vertex v) const {
  return std::binary_search(edge_keys_.begin(), edge_keys_.end(), pair_key(u, v));
}

bool Tree::is_path() const {
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) > 2) return false;
  }
  return true;
}

std::vector<Vertex> Tree::path_order() const {
  if (!is_path()) throw std::invalid_argument("tree is not a path");
  std::vector<Vertex> order;
  order.reserve(n_);
  Vertex start = 0;
  if (n_ > 1) {
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) == 1) {
        start = v;
        break;
      }
    }
  }
  Vertex prev = kNoVertex, cur = start;
  while (cur != kNoVertex) {
    order.push_back(cur);
    Vertex next = kNoVertex;
    for (const Neighbor& nb : neighbors(cur)) {
      if (nb.to != prev) next = nb.to;
    }
    prev = cur;
    cur = next;
  }
  return order;
}

std::size_t Tree::leaf_count() const {
  if (n_ == 1) return 1;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n_; ++v) leaves += degree(v) == 1 ? 1 : 0;
  return leaves;
}

std::vector<Vertex> Tree::branch_vertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (degree(v) >= 3) out.push_back(v);
  }
  return out;
}

bool Tree::is_binary() const {
  const Vertex r = root_or_default();
  for (Vertex v = 0; v < n_; ++v) {
    const int children = v == r ? degree(v) : degree(v) - 1;
    if (children > 2) return false;
  }
  return true;
}

Tree Tree::with_root(Vertex r) const { return Tree(n_, edges_, r); }

}  // namespace augtree
