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
#include <vector>

#include "augtree/binarize.hpp"
#include "augtree/farthest.hpp"
#include "augtree/instance.hpp"

namespace augtree {

/// Diameter value with a pair of vertices realizing it.
struct DiameterResult {
  Cost diam = 0;
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  friend bool operator==(const DiameterResult&, const DiameterResult&) = default;
};

/// Shrunk tree plus the shortcuts, as a small multigraph. Vertex i of the
/// graph is `vertices[i]` of the underlying tree.
struct CondensedGraph {
  struct Arc {
    std::int32_t to;
    Cost cost;
  };
  std::vector<Vertex> vertices;
  std::vector<std::vector<Arc>> adj;

  /// Index of tree vertex v, or -1.
  std::int32_t local(Vertex v) const;
  /// Single-source distances, aligned with `vertices`.
  std::vector<Cost> distances_from(Vertex source) const;
};

/// T(M) of `fs` with tree-distance edges, plus the shortcuts (whose endpoints
/// must all be in T(M)).
CondensedGraph build_condensed(const FarthestStructure& fs, const ShortcutSet& s);

/// Eccentricity of s in T+S. Marks s and the shortcut endpoints in `fs`,
/// evaluates, and rolls back, so `fs` is left as it was.
Cost ecc_from_source(FarthestStructure& fs, const ShortcutSet& s, Vertex source);

/// Two-sweep diameter of a tree.
DiameterResult tree_diameter(const Tree& tree);

/// Dijkstra from every vertex of T+S. O(n^2 log n); reference only.
Cost naive_diameter(const Tree& tree, const ShortcutSet& s);
/// Single-source distances in T+S.
std::vector<Cost> dijkstra_distances(const Tree& tree, const ShortcutSet& s, Vertex source);

/// Diameter of P+S for a path P: per-source condensed Dijkstra plus a binary
/// search on every stretch between consecutive terminals.
/// Throws std::invalid_argument when the tree is not a path.
Cost path_diameter(const Tree& path, const ShortcutSet& s);

/// Reusable evaluator of diam(T+S) for a fixed tree and varying S.
///
/// Holds the binarized tree and one farthest structure. Each evaluation runs
/// one eccentricity computation per original vertex, O(n k log n) in total.
class DiameterEngine {
 public:
  explicit DiameterEngine(const Tree& tree);

  const Tree& tree() const { return tree_; }

  DiameterResult diameter(const ShortcutSet& s, int threads = 1);
  /// The diameter if it is strictly below `cutoff`, else nullopt. Stops at
  /// the first source whose eccentricity reaches the cutoff and tries that
  /// source first next time.
  std::optional<DiameterResult> diameter_below(const ShortcutSet& s, Cost cutoff);
  /// Eccentricity of s in T+S with the farthest vertex.
  DiameterResult eccentricity(const ShortcutSet& s, Vertex source);

 private:
  // Marks the shortcut endpoints of local_s_; the caller rolls back.
  void mark_endpoints();
  void localize(const ShortcutSet& s);
  DiameterResult eval_source(Vertex source);

  Tree tree_;
  // The binarized tree relabeled in preorder, for memory locality.
  std::vector<Vertex> to_local_;  // original vertex -> local id
  std::vector<Vertex> owner_;     // local id -> original vertex
  FarthestStructure fs_;
  std::vector<Vertex> sources_;  // original vertices by local id
  std::vector<Vertex> hot_order_;
  ShortcutSet local_s_;
};

/// diam(T+S) with a witness pair. S may be empty, in which case the plain
/// tree diameter is returned. threads > 1 shards sources over independent
/// structure copies.
DiameterResult graph_diameter(const Tree& tree, const ShortcutSet& s, int threads = 1);

}  // namespace augtree
