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

#include "augtree/link_cut.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace augtree {

// ---------------------------------------------------------------------------
// LinkCutForest

LinkCutForest::LinkCutForest(Vertex capacity)
    : nodes_(capacity), present_(capacity, 0), adj_(capacity), member_pos_(capacity, -1) {}

void LinkCutForest::require(Vertex v) const {
  if (v < 0 || v >= capacity()) throw std::out_of_range("vertex id out of range");
  if (!present_[v]) throw std::logic_error("vertex " + std::to_string(v) + " not in forest");
}

bool LinkCutForest::is_splay_root(int x) const {
  const int p = nodes_[x].par;
  return p < 0 || (nodes_[p].ch[0] != x && nodes_[p].ch[1] != x);
}

void LinkCutForest::push(int x) {
  Node& n = nodes_[x];
  if (!n.rev) return;
  for (int c : n.ch) {
    if (c >= 0) {
      std::swap(nodes_[c].ch[0], nodes_[c].ch[1]);
      nodes_[c].rev = !nodes_[c].rev;
    }
  }
  n.rev = false;
}

void LinkCutForest::rotate(int x) {
  const int p = nodes_[x].par;
  const int g = nodes_[p].par;
  const int dir = nodes_[p].ch[1] == x ? 1 : 0;
  const int b = nodes_[x].ch[dir ^ 1];
  if (!is_splay_root(p)) nodes_[g].ch[nodes_[g].ch[1] == p ? 1 : 0] = x;
  nodes_[x].par = g;
  nodes_[x].ch[dir ^ 1] = p;
  nodes_[p].par = x;
  nodes_[p].ch[dir] = b;
  if (b >= 0) nodes_[b].par = p;
}

void LinkCutForest::splay(int x) {
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

void LinkCutForest::access(int x) {
  int last = -1;
  for (int y = x; y >= 0; y = nodes_[y].par) {
    splay(y);
    nodes_[y].ch[1] = last;
    last = y;
  }
  splay(x);
}

void LinkCutForest::evert(int x) {
  access(x);
  std::swap(nodes_[x].ch[0], nodes_[x].ch[1]);
  nodes_[x].rev = !nodes_[x].rev;
}

int LinkCutForest::find_root(int x) {
  access(x);
  int r = x;
  for (;;) {
    push(r);
    if (nodes_[r].ch[0] < 0) break;
    r = nodes_[r].ch[0];
  }
  splay(r);
  return r;
}

void LinkCutForest::add_vertex(Vertex v, bool terminal) {
  if (v < 0 || v >= capacity()) throw std::out_of_range("vertex id out of range");
  if (present_[v]) throw std::logic_error("vertex " + std::to_string(v) + " already in forest");
  present_[v] = terminal ? 2 : 1;
  nodes_[v] = Node{};
  member_pos_[v] = static_cast<std::int32_t>(members_.size());
  members_.push_back(v);
}

void LinkCutForest::remove_vertex(Vertex v) {
  require(v);
  if (!adj_[v].empty()) throw std::logic_error("cannot remove a vertex with incident edges");
  present_[v] = 0;
  const std::int32_t pos = member_pos_[v];
  members_[pos] = members_.back();
  member_pos_[members_[pos]] = pos;
  members_.pop_back();
  member_pos_[v] = -1;
}

void LinkCutForest::link(Vertex u, Vertex v) {
  require(u);
  require(v);
  if (u == v || connected(u, v)) throw std::logic_error("link within one component");
  evert(u);
  nodes_[u].par = v;
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

void LinkCutForest::cut(Vertex u, Vertex v) {
  require(u);
  require(v);
  if (!has_edge(u, v)) throw std::logic_error("cut of an absent edge");
  evert(u);
  access(v);
  // The path is u - v, so u is v's left child with nothing below it.
  nodes_[v].ch[0] = -1;
  nodes_[u].par = -1;
  std::erase(adj_[u], v);
  std::erase(adj_[v], u);
}

bool LinkCutForest::connected(Vertex u, Vertex v) {
  require(u);
  require(v);
  return u == v || find_root(u) == find_root(v);
}

bool LinkCutForest::has_edge(Vertex u, Vertex v) const {
  const auto& a = adj_[u];
  return std::find(a.begin(), a.end(), v) != a.end();
}

void LinkCutForest::set_terminal(Vertex v, bool terminal) {
  require(v);
  present_[v] = terminal ? 2 : 1;
}

LinkCutForest::Snapshot LinkCutForest::export_snapshot() const {
  Snapshot s;
  s.vertices = members_;
  std::sort(s.vertices.begin(), s.vertices.end());
  for (Vertex v : s.vertices) {
    s.terminal.push_back(is_terminal(v));
    for (Vertex w : adj_[v]) {
      if (v < w) s.edges.emplace_back(v, w);
    }
  }
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

// ---------------------------------------------------------------------------
// MarkedAncestorStructure

MarkedAncestorStructure::MarkedAncestorStructure(std::span<const Vertex> parent)
    : nodes_(parent.size()), parent_(parent.begin(), parent.end()) {
  // Every node starts as its own splay tree hanging from its parent.
  for (std::size_t v = 0; v < parent.size(); ++v) nodes_[v].par = parent[v];
}

bool MarkedAncestorStructure::is_splay_root(int x) const {
  const int p = nodes_[x].par;
  return p < 0 || (nodes_[p].ch[0] != x && nodes_[p].ch[1] != x);
}

void MarkedAncestorStructure::pull(int x) {
  Node& n = nodes_[x];
  n.count = n.marked ? 1 : 0;
  for (int c : n.ch) {
    if (c >= 0) n.count += nodes_[c].count;
  }
}

void MarkedAncestorStructure::rotate(int x) {
  const int p = nodes_[x].par;
  const int g = nodes_[p].par;
  const int dir = nodes_[p].ch[1] == x ? 1 : 0;
  const int b = nodes_[x].ch[dir ^ 1];
  if (!is_splay_root(p)) nodes_[g].ch[nodes_[g].ch[1] == p ? 1 : 0] = x;
  nodes_[x].par = g;
  nodes_[x].ch[dir ^ 1] = p;
  nodes_[p].par = x;
  nodes_[p].ch[dir] = b;
  if (b >= 0) nodes_[b].par = p;
  pull(p);
  pull(x);
}

void MarkedAncestorStructure::splay(int x) {
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

void MarkedAncestorStructure::access(int x) {
  int last = -1;
  for (int y = x; y >= 0; y = nodes_[y].par) {
    splay(y);
    nodes_[y].ch[1] = last;
    pull(y);
    last = y;
  }
  splay(x);
}

void MarkedAncestorStructure::set(Vertex v, bool marked) {
  if (v < 0 || v >= size()) throw std::out_of_range("vertex id out of range");
  splay(v);
  nodes_[v].marked = marked;
  pull(v);
}

void MarkedAncestorStructure::mark(Vertex v) { set(v, true); }
void MarkedAncestorStructure::unmark(Vertex v) { set(v, false); }

std::optional<Vertex> MarkedAncestorStructure::closest_marked_ancestor(Vertex v) {
  if (v < 0 || v >= size()) throw std::out_of_range("vertex id out of range");
  const Vertex p = parent_[v];
  if (p == kNoVertex) return std::nullopt;
  access(p);
  if (nodes_[p].count == 0) return std::nullopt;
  // The splay tree holds root..p in order; take the rightmost marked node.
  int x = p;
  for (;;) {
    const int r = nodes_[x].ch[1];
    if (r >= 0 && nodes_[r].count > 0) {
      x = r;
    } else if (nodes_[x].marked) {
      break;
    } else {
      x = nodes_[x].ch[0];
    }
  }
  splay(x);
  return x;
}

}  // namespace augtree
