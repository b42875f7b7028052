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

#include <vector>

#include "augtree/ecc_forest.hpp"
#include "augtree/link_cut.hpp"
#include "augtree/static_tree_index.hpp"
#include "augtree/tree.hpp"

namespace augtree {

struct ShrunkTree {
  struct Node {
    Vertex id = 0;
    bool terminal = false;
    friend bool operator==(const Node&, const Node&) = default;
  };
  struct Link {
    Vertex u = 0;  // ancestor side
    Vertex v = 0;
    Dist length;
    friend bool operator==(const Link&, const Link&) = default;
  };
  std::vector<Node> vertices;  // sorted by id
  std::vector<Link> edges;     // sorted by (u, v)

  friend bool operator==(const ShrunkTree&, const ShrunkTree&) = default;
};

/// Answer of report_farthest(). For every vertex x let
///   K(x) = min over terminals t of (alpha_t + d(t, x), hops(t, x), t).
/// value is the largest K(x).cost; witness is the x maximizing
/// (K(x).cost, K(x).hops), smallest id on ties; terminal is the owner of
/// K(witness).
struct FarthestReport {
  Cost value = 0;
  Vertex terminal = kNoVertex;
  Vertex witness = kNoVertex;
  friend bool operator==(const FarthestReport&, const FarthestReport&) = default;
};

/// Terminal set M over a binary tree T with per-terminal offsets alpha.
///
/// Maintains the shrunk tree T(M) (root plus the lca closure of M) and
/// answers max_x min_t (alpha_t + d(t, x)) in O(|M| log n). All updates are
/// journaled and can be undone with checkpoint()/rollback().
class FarthestStructure {
 public:
  struct Checkpoint {
    std::size_t depth = 0;
    std::size_t journal_size = 0;
  };

  FarthestStructure() = default;
  /// Throws std::invalid_argument unless the tree is binary w.r.t. its root.
  explicit FarthestStructure(const Tree& tree);

  Vertex size() const { return index_.size(); }
  Vertex root() const { return index_.root(); }
  const StaticTreeIndex& index() const { return index_; }

  void make_terminal(Vertex v);
  bool is_terminal(Vertex v) const { return lcf_.has_vertex(v) && lcf_.is_terminal(v); }
  bool in_shrunk_tree(Vertex v) const { return lcf_.has_vertex(v); }
  std::size_t terminal_count() const { return terminal_count_; }

  void set_alpha(Vertex v, Cost alpha);
  Cost alpha(Vertex v) const;

  ShrunkTree shrink() const;
  /// Parent of v in T(M); kNoVertex for the root.
  Vertex shrunk_parent(Vertex v) const;
  std::span<const Vertex> shrunk_vertices() const { return lcf_.vertices(); }

  FarthestReport report_farthest();

  /// Vertex u of T(M) whose piece contains each vertex of T after the
  /// cutting phase of report_farthest(). Test hook, O(n).
  std::vector<Vertex> debug_partition();

  Checkpoint checkpoint();
  void rollback(Checkpoint token);

  /// Nearest marked proper ancestor, as seen by make_terminal.
  std::optional<Vertex> closest_marked_ancestor(Vertex v) { return marks_.closest_marked_ancestor(v); }

 private:
  enum class Op : std::uint8_t { kFlag, kLeaf, kSplit, kSteiner, kAlpha };
  struct JournalEntry {
    Op op;
    Vertex v, y, z, u;
    Cost old_alpha;
  };
  struct Cut {
    Vertex parent, child;
  };

  void check_vertex(Vertex v) const;
  // Phases 1 and 2; fills order_, best_, cuts_.
  void prepare_pieces();
  void relink_cuts();

  StaticTreeIndex index_;
  LinkCutForest lcf_;
  MarkedAncestorStructure marks_;
  EccForest ecc_;
  std::vector<Cost> alpha_;
  std::size_t terminal_count_ = 0;
  std::vector<JournalEntry> journal_;
  std::vector<Checkpoint> checkpoints_;

  // Query scratch, indexed by vertex id.
  std::vector<TieDist> best_;
  std::vector<Vertex> order_;
  std::vector<Cut> cuts_;
};

}  // namespace augtree
