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

#include "augtree/ecc_forest.hpp"

#include <algorithm>
#include <stdexcept>

namespace augtree {
namespace {

bool better(const FarVertex& a, const FarVertex& b) {
  if (a.empty()) return false;
  if (b.empty()) return true;
  if (a.dist != b.dist) return a.dist > b.dist;
  return a.vertex < b.vertex;
}

FarVertex best(const FarVertex& a, const FarVertex& b) { return better(b, a) ? b : a; }

FarVertex shifted(FarVertex f, Dist by) {
  if (!f.empty()) f.dist = f.dist + by;
  return f;
}

// Cost of a path joining two far points; -1 if either is missing.
Cost join(const FarVertex& a, Cost mid, const FarVertex& b) {
  if (a.empty() || b.empty()) return -1;
  return a.dist.cost + mid + b.dist.cost;
}

}  // namespace

EccForest::EccForest(Vertex n) : n_(n), nodes_(static_cast<std::size_t>(n) + 2) {
  for (Vertex v = 0; v <= n; ++v) {
    nodes_[vnode(v)].is_vertex = true;
    pull(vnode(v));
  }
}

EccForest::EccForest(const Tree& tree) : EccForest(tree.size()) {
  const Vertex n = tree.size();
  if (n == 0) return;
  edge_of_.reserve(static_cast<std::size_t>(n) * 2);
  nodes_.reserve(static_cast<std::size_t>(2 * n) + 2);
  // Bottom-up: every node is a singleton splay tree, all children virtual.
  std::vector<Vertex> order{0};
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Cost> up_cost(n, 0);
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (const Neighbor& nb : tree.neighbors(v)) {
      if (nb.to == parent[v]) continue;
      parent[nb.to] = v;
      up_cost[nb.to] = nb.cost;
      order.push_back(nb.to);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex c = *it;
    pull(vnode(c));
    if (parent[c] == kNoVertex) continue;
    const int e = new_edge_node(up_cost[c]);
    edge_of_.emplace(pair_key(c, parent[c]), e);
    total_weight_ += up_cost[c];
    nodes_[vnode(c)].par = e;
    nodes_[e].virt.push_back(summary(vnode(c)));
    pull(e);
    nodes_[e].par = vnode(parent[c]);
    nodes_[vnode(parent[c])].virt.push_back(summary(e));
  }
}

void EccForest::check_vertex(Vertex v) const {
  if (v < 0 || v > n_) throw std::out_of_range("vertex id out of range");
}

int EccForest::new_edge_node(Cost w) {
  int e;
  if (!free_.empty()) {
    e = free_.back();
    free_.pop_back();
    nodes_[e] = Node{};
  } else {
    e = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
  }
  nodes_[e].weight = {w, 1};
  pull(e);
  return e;
}

bool EccForest::is_splay_root(int x) const {
  const int p = nodes_[x].par;
  return p == 0 || (nodes_[p].ch[0] != x && nodes_[p].ch[1] != x);
}

// The node's own aggregate is flipped immediately; children stay pending.
void EccForest::apply_rev(int x) {
  if (x == 0) return;
  Node& n = nodes_[x];
  std::swap(n.ch[0], n.ch[1]);
  std::swap(n.up, n.down);
  n.rev = !n.rev;
}

void EccForest::push(int x) {
  if (!nodes_[x].rev) return;
  apply_rev(nodes_[x].ch[0]);
  apply_rev(nodes_[x].ch[1]);
  nodes_[x].rev = false;
}

void EccForest::pull(int x) {
  Node& n = nodes_[x];
  const Node& l = nodes_[n.ch[0]];
  const Node& r = nodes_[n.ch[1]];

  // Best two virtual branches by far point, best virtual diameter.
  FarVertex v1, v2;
  Cost vdiam = -1;
  for (const Summary& s : n.virt) {
    if (better(s.up, v1)) {
      v2 = v1;
      v1 = s.up;
    } else if (better(s.up, v2)) {
      v2 = s.up;
    }
    vdiam = std::max(vdiam, s.diam);
  }

  // Farthest point reachable from the near side of x, staying local to x.
  FarVertex local = shifted(v1, n.weight);
  if (n.is_vertex) local = best(local, FarVertex{Dist{}, static_cast<Vertex>(x - 1)});

  n.sum = l.sum + n.weight + r.sum;
  n.up = best(best(l.up, shifted(local, l.sum)), shifted(r.up, l.sum + n.weight));
  n.down = best(best(r.down, shifted(local, r.sum)), shifted(l.down, r.sum + n.weight));

  Cost d = std::max({l.diam, r.diam, vdiam});
  const Cost w = n.weight.cost;
  d = std::max({d, join(l.down, 0, local), join(r.up, 0, local), join(l.down, w, r.up)});
  d = std::max(d, join(v1, w, v2));
  if (n.is_vertex && !local.empty()) d = std::max(d, local.dist.cost);
  n.diam = d;
}

void EccForest::rotate(int x) {
  const int p = nodes_[x].par;
  const int g = nodes_[p].par;
  const int dir = nodes_[p].ch[1] == x ? 1 : 0;
  const int b = nodes_[x].ch[dir ^ 1];
  if (!is_splay_root(p)) nodes_[g].ch[nodes_[g].ch[1] == p ? 1 : 0] = x;
  nodes_[x].par = g;
  nodes_[x].ch[dir ^ 1] = p;
  nodes_[p].par = x;
  nodes_[p].ch[dir] = b;
  if (b != 0) nodes_[b].par = p;
  pull(p);
  pull(x);
}

void EccForest::splay(int x) {
  stack_.clear();
  for (int y = x;; y = nodes_[y].par) {
    stack_.push_back(y);
    if (is_splay_root(y)) break;
  }
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) push(*it);
  while (!is_splay_root(x)) {
    const int p = nodes_[x].par;
    if (!is_splay_root(p)) {
      const int g = nodes_[p].par;
      const bool zigzig = (nodes_[g].ch[1] == p) == (nodes_[p].ch[1] == x);
      rotate(zigzig ? p : x);
    }
    rotate(x);
  }
}

void EccForest::add_virtual(int x, int child) { nodes_[x].virt.push_back(summary(child)); }

// Summaries of a hanging subtree do not depend on its splay shape, so the
// stored copy still matches the child's current aggregate.
void EccForest::remove_virtual(int x, int child) {
  auto& virt = nodes_[x].virt;
  const Summary s = summary(child);
  const auto it = std::find(virt.begin(), virt.end(), s);
  if (it == virt.end()) throw std::logic_error("ecc forest: virtual summary out of sync");
  *it = virt.back();
  virt.pop_back();
}

void EccForest::access(int x) {
  int last = 0;
  for (int y = x; y != 0; y = nodes_[y].par) {
    splay(y);
    if (nodes_[y].ch[1] != 0) add_virtual(y, nodes_[y].ch[1]);
    if (last != 0) remove_virtual(y, last);
    nodes_[y].ch[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void EccForest::evert(int x) {
  access(x);
  apply_rev(x);
}

void EccForest::attach(int child, int parent) {
  access(parent);
  nodes_[child].par = parent;
  add_virtual(parent, child);
  pull(parent);
}

void EccForest::detach_adjacent(int a, int b) {
  evert(a);
  access(b);
  // Path is a - b; a is b's left child.
  push(b);
  nodes_[b].ch[0] = 0;
  nodes_[a].par = 0;
  pull(b);
}

void EccForest::link(Vertex u, Vertex v, Cost w) {
  check_vertex(u);
  check_vertex(v);
  if (w < 0) throw std::invalid_argument("negative edge weight");
  if (u == v) throw std::logic_error("link within one component");
  const int a = vnode(u), b = vnode(v);
  evert(a);
  access(b);
  // After evert(a) and access(b), a lies in b's splay tree iff connected.
  for (int y = a; y != 0; y = nodes_[y].par) {
    if (y == b) throw std::logic_error("link within one component");
    if (is_splay_root(y)) break;
  }
  const int e = new_edge_node(w);
  evert(a);
  nodes_[a].par = e;
  add_virtual(e, a);
  pull(e);
  attach(e, b);
  edge_of_.emplace(pair_key(u, v), e);
  total_weight_ += w;
}

void EccForest::cut(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  const auto it = edge_of_.find(pair_key(u, v));
  if (it == edge_of_.end()) throw std::logic_error("cut of an absent edge");
  const int e = it->second;
  total_weight_ -= nodes_[e].weight.cost;
  edge_of_.erase(it);
  detach_adjacent(vnode(u), e);
  detach_adjacent(e, vnode(v));
  free_.push_back(e);
}

FarVertex EccForest::eccentricity(Vertex v) {
  check_vertex(v);
  access(vnode(v));
  return nodes_[vnode(v)].down;
}

Cost EccForest::diameter(Vertex v) {
  check_vertex(v);
  access(vnode(v));
  return nodes_[vnode(v)].diam;
}

Cost EccForest::eccentricity_via_diameter(Vertex v) {
  check_vertex(v);
  if (v == n_) throw std::invalid_argument("auxiliary vertex");
  const Cost heavy = total_weight_ + 1;
  link(v, n_, heavy);
  const Cost d = diameter(n_);
  cut(v, n_);
  return d - heavy;
}

}  // namespace augtree
