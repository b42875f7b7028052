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

#include <unordered_map>
#include <vector>

#include "augtree/tree.hpp"

namespace augtree {

/// Farthest vertex from a query point: largest (cost, hops), then smallest id.
struct FarVertex {
  Dist dist;
  Vertex vertex = kNoVertex;

  bool empty() const { return vertex == kNoVertex; }
  friend bool operator==(const FarVertex&, const FarVertex&) = default;
};

/// Edge-weighted dynamic forest with eccentricity and diameter queries.
///
/// Link-cut tree in which every edge is a node of its own; each splay node
/// aggregates its path segment together with everything hanging from it
/// (max distance from either end, diameter), so the queries are answered in
/// O(log n) amortized time. Vertex ids are [0, n); id n is reserved for the
/// auxiliary vertex of eccentricity_via_diameter().
class EccForest {
 public:
  EccForest() = default;
  explicit EccForest(Vertex n);
  /// Forest holding every edge of `tree`, built in O(n).
  explicit EccForest(const Tree& tree);

  Vertex size() const { return n_; }
  void link(Vertex u, Vertex v, Cost w);
  void cut(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return edge_of_.contains(pair_key(u, v)); }
  std::size_t edge_count() const { return edge_of_.size(); }

  /// Max distance from v within its component and the farthest vertex
  /// (ties: more hops, then smaller id).
  FarVertex eccentricity(Vertex v);
  /// Diameter cost of v's component.
  Cost diameter(Vertex v);
  /// Eccentricity cost computed from diameters only: links an auxiliary
  /// vertex to v by an edge heavier than every component diameter.
  Cost eccentricity_via_diameter(Vertex v);

 private:
  struct Summary {
    FarVertex up;
    Cost diam = -1;
    friend bool operator==(const Summary&, const Summary&) = default;
  };
  struct Node {
    int ch[2] = {0, 0};
    int par = 0;
    bool rev = false;
    bool is_vertex = false;
    Dist weight;
    Dist sum;
    FarVertex up, down;
    Cost diam = -1;  // -1: no vertex inside
    std::vector<Summary> virt;
  };

  // Node ids: 0 is the null sentinel, vertex v is v + 1, edges follow.
  static int vnode(Vertex v) { return v + 1; }
  void check_vertex(Vertex v) const;
  int new_edge_node(Cost w);
  bool is_splay_root(int x) const;
  void apply_rev(int x);
  void push(int x);
  void pull(int x);
  void rotate(int x);
  void splay(int x);
  void access(int x);
  void evert(int x);
  Summary summary(int x) const { return {nodes_[x].up, nodes_[x].diam}; }
  void add_virtual(int x, int child);
  void remove_virtual(int x, int child);
  void attach(int child, int parent);  // child is an everted splay root
  void detach_adjacent(int a, int b);

  Vertex n_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> free_;
  std::unordered_map<std::uint64_t, int> edge_of_;
  Cost total_weight_ = 0;
  std::vector<int> stack_;
};

}  // namespace augtree
