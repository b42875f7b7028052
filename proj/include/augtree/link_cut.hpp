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

#include "augtree/tree.hpp"

namespace augtree {

/// Dynamic forest over a fixed id range [0, capacity).
///
/// Vertices are added and removed explicitly; connectivity is answered by a
/// link-cut tree and the adjacency is kept alongside for O(size) export.
class LinkCutForest {
 public:
  struct Snapshot {
    std::vector<Vertex> vertices;  // sorted
    std::vector<std::pair<Vertex, Vertex>> edges;  // (min, max), sorted
    std::vector<bool> terminal;  // parallel to vertices

    friend bool operator==(const Snapshot&, const Snapshot&) = default;
  };

  LinkCutForest() = default;
  explicit LinkCutForest(Vertex capacity);

  Vertex capacity() const { return static_cast<Vertex>(present_.size()); }
  std::size_t vertex_count() const { return members_.size(); }
  bool has_vertex(Vertex v) const { return present_[v] != 0; }

  void add_vertex(Vertex v, bool terminal = false);
  /// v must be isolated.
  void remove_vertex(Vertex v);
  void link(Vertex u, Vertex v);
  void cut(Vertex u, Vertex v);
  bool connected(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::span<const Vertex> vertices() const { return members_; }

  void set_terminal(Vertex v, bool terminal);
  bool is_terminal(Vertex v) const { return present_[v] == 2; }

  Snapshot export_snapshot() const;

 private:
  struct Node {
    int ch[2] = {-1, -1};
    int par = -1;
    bool rev = false;
  };

  bool is_splay_root(int x) const;
  void push(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  void evert(int x);
  int find_root(int x);
  void require(Vertex v) const;

  std::vector<Node> nodes_;
  std::vector<std::uint8_t> present_;  // 0 absent, 1 Steiner, 2 terminal
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> members_;
  std::vector<std::int32_t> member_pos_;
  std::vector<int> stack_;
};

/// Static rooted tree with a mutable marked set and closest marked ancestor
/// queries in O(log n) amortized time.
class MarkedAncestorStructure {
 public:
  MarkedAncestorStructure() = default;
  /// parent[v] is kNoVertex for the root.
  explicit MarkedAncestorStructure(std::span<const Vertex> parent);

  Vertex size() const { return static_cast<Vertex>(nodes_.size()); }
  void mark(Vertex v);
  void unmark(Vertex v);
  bool is_marked(Vertex v) const { return nodes_[v].marked; }
  /// Nearest proper ancestor of v that is marked.
  std::optional<Vertex> closest_marked_ancestor(Vertex v);

 private:
  struct Node {
    int ch[2] = {-1, -1};
    int par = -1;
    int count = 0;
    bool marked = false;
  };

  bool is_splay_root(int x) const;
  void pull(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  void set(Vertex v, bool marked);

  std::vector<Node> nodes_;
  std::vector<Vertex> parent_;
};

}  // namespace augtree
