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

#include "augtree/farthest.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace augtree {
namespace {

TieDist extend(const TieDist& t, Dist d) { return {t.cost + d.cost, t.hops + d.hops, t.owner}; }

// Key of vertex x seen from shrunk vertex u: (beta_u + d, h_u + hops, nu_u, hops).
struct PieceKey {
  TieDist tie;
  std::int64_t hops;
  friend auto operator<=>(const PieceKey&, const PieceKey&) = default;
};

PieceKey piece_key(const TieDist& best, Dist d) { return {extend(best, d), d.hops}; }

}  // namespace

FarthestStructure::FarthestStructure(const Tree& tree)
    : index_(tree),
      lcf_(tree.size()),
      ecc_(tree),
      alpha_(tree.size(), 0),
      best_(tree.size()) {
  if (!tree.is_binary()) throw std::invalid_argument("farthest structure needs a binary tree");
  std::vector<Vertex> parent(tree.size());
  for (Vertex v = 0; v < tree.size(); ++v) parent[v] = index_.parent(v);
  marks_ = MarkedAncestorStructure(parent);
  lcf_.add_vertex(root());
  marks_.mark(root());
}

void FarthestStructure::check_vertex(Vertex v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("vertex id out of range");
}

Vertex FarthestStructure::shrunk_parent(Vertex v) const {
  for (Vertex w : lcf_.neighbors(v)) {
    if (index_.is_ancestor(w, v)) return w;
  }
  return kNoVertex;
}

void FarthestStructure::make_terminal(Vertex v) {
  check_vertex(v);
  if (is_terminal(v)) throw std::logic_error("vertex " + std::to_string(v) + " is already a terminal");
  ++terminal_count_;
  if (lcf_.has_vertex(v)) {
    journal_.push_back({Op::kFlag, v, kNoVertex, kNoVertex, kNoVertex, alpha_[v]});
    lcf_.set_terminal(v, true);
    alpha_[v] = 0;
    return;
  }
  const Vertex z = *marks_.closest_marked_ancestor(v);
  Vertex split_child = kNoVertex, y = kNoVertex;
  for (Vertex u : lcf_.neighbors(z)) {
    if (!index_.is_ancestor(z, u)) continue;  // z's own parent
    const Vertex w = index_.lca(v, u);
    if (w != z) {
      split_child = u;
      y = w;
      break;
    }
  }
  journal_.push_back({Op::kLeaf, v, kNoVertex, z, split_child, alpha_[v]});
  alpha_[v] = 0;
  lcf_.add_vertex(v, true);
  marks_.mark(v);
  if (split_child == kNoVertex) {  // (i) new leaf under z
    lcf_.link(z, v);
    return;
  }
  lcf_.cut(z, split_child);
  if (y == v) {  // (ii) v splits (z, u)
    journal_.back().op = Op::kSplit;
    lcf_.link(z, v);
    lcf_.link(v, split_child);
    return;
  }
  // (iii) Steiner y splits (z, u) and v hangs from y
  journal_.back().op = Op::kSteiner;
  journal_.back().y = y;
  lcf_.add_vertex(y);
  marks_.mark(y);
  lcf_.link(z, y);
  lcf_.link(y, split_child);
  lcf_.link(y, v);
}

void FarthestStructure::set_alpha(Vertex v, Cost a) {
  check_vertex(v);
  if (!is_terminal(v)) throw std::logic_error("set_alpha on a non-terminal vertex");
  if (a < 0) throw std::invalid_argument("alpha must be non-negative");
  journal_.push_back({Op::kAlpha, v, kNoVertex, kNoVertex, kNoVertex, alpha_[v]});
  alpha_[v] = a;
}

Cost FarthestStructure::alpha(Vertex v) const {
  check_vertex(v);
  if (!is_terminal(v)) throw std::logic_error("alpha of a non-terminal vertex");
  return alpha_[v];
}

ShrunkTree FarthestStructure::shrink() const {
  ShrunkTree t;
  for (Vertex v : lcf_.vertices()) {
    t.vertices.push_back({v, lcf_.is_terminal(v)});
    const Vertex p = shrunk_parent(v);
    if (p != kNoVertex) t.edges.push_back({p, v, index_.dist_hops(p, v)});
  }
  std::sort(t.vertices.begin(), t.vertices.end(), [](auto& a, auto& b) { return a.id < b.id; });
  std::sort(t.edges.begin(), t.edges.end(),
            [](auto& a, auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return t;
}

void FarthestStructure::prepare_pieces() {
  if (terminal_count_ == 0) throw std::logic_error("report_farthest with no terminals");

  // Preorder of T(M).
  order_.clear();
  order_.push_back(root());
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const Vertex x = order_[i];
    for (Vertex c : lcf_.neighbors(x)) {
      if (c != root() && index_.is_ancestor(x, c)) order_.push_back(c);
    }
  }

  // Phase 1: best (alpha_t + d, hops, t) for every shrunk vertex.
  constexpr TieDist kNone{std::numeric_limits<Cost>::max(), 0, kNoVertex};
  for (Vertex x : order_) best_[x] = is_terminal(x) ? TieDist{alpha_[x], 0, x} : kNone;
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Vertex c = *it;
    if (c == root() || best_[c].owner == kNoVertex) continue;
    const Vertex p = shrunk_parent(c);
    best_[p] = std::min(best_[p], extend(best_[c], index_.dist_hops(p, c)));
  }
  for (Vertex c : order_) {
    if (c == root()) continue;
    const Vertex p = shrunk_parent(c);
    best_[c] = std::min(best_[c], extend(best_[p], index_.dist_hops(p, c)));
  }

  // Phase 2: split each T(M) edge path where the parent's key stops winning.
  cuts_.clear();
  for (Vertex c : order_) {
    if (c == root()) continue;
    const Vertex p = shrunk_parent(c);
    const std::int32_t len = index_.depth_hops(c) - index_.depth_hops(p) + 1;  // |P|
    auto parent_wins = [&](std::int32_t i) {
      const Vertex x = index_.level_ancestor(c, len - i);
      const Dist dp{index_.dist_to_root(x) - index_.dist_to_root(p), i - 1};
      const Dist dc{index_.dist_to_root(c) - index_.dist_to_root(x), len - i};
      return piece_key(best_[p], dp) < piece_key(best_[c], dc);
    };
    std::int32_t lo = 2, hi = len;  // parent_wins(len) is false
    while (lo < hi) {
      const std::int32_t mid = lo + (hi - lo) / 2;
      if (parent_wins(mid)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    const Vertex xi = index_.level_ancestor(c, len - lo);
    cuts_.push_back({index_.parent(xi), xi});
    ecc_.cut(index_.parent(xi), xi);
  }
}

void FarthestStructure::relink_cuts() {
  for (const Cut& cut : cuts_) ecc_.link(cut.parent, cut.child, index_.parent_edge_cost(cut.child));
  cuts_.clear();
}

FarthestReport FarthestStructure::report_farthest() {
  prepare_pieces();
  // Phase 3: farthest vertex inside each piece.
  FarthestReport out;
  std::int64_t out_hops = -1;
  for (Vertex u : order_) {
    const FarVertex f = ecc_.eccentricity(u);
    const Cost value = best_[u].cost + f.dist.cost;
    const std::int64_t hops = best_[u].hops + f.dist.hops;
    if (std::tie(value, hops) > std::tie(out.value, out_hops) ||
        (value == out.value && hops == out_hops && f.vertex < out.witness)) {
      out = {value, best_[u].owner, f.vertex};
      out_hops = hops;
    }
  }
  relink_cuts();
  return out;
}

std::vector<Vertex> FarthestStructure::debug_partition() {
  prepare_pieces();
  std::vector<std::uint64_t> cut_keys;
  for (const Cut& c : cuts_) cut_keys.push_back(pair_key(c.parent, c.child));
  std::sort(cut_keys.begin(), cut_keys.end());
  relink_cuts();

  std::vector<Vertex> piece(size(), kNoVertex);
  for (Vertex u : order_) piece[u] = u;
  // Spread along uncut tree edges: downwards in preorder, then upwards.
  const auto pre = index_.preorder();
  auto spread = [&](Vertex y) {
    const Vertex x = index_.parent(y);
    if (x == kNoVertex) return false;
    if (std::binary_search(cut_keys.begin(), cut_keys.end(), pair_key(x, y))) return false;
    if (piece[y] == kNoVertex && piece[x] != kNoVertex) {
      piece[y] = piece[x];
      return true;
    }
    if (piece[x] == kNoVertex && piece[y] != kNoVertex) {
      piece[x] = piece[y];
      return true;
    }
    return false;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex y : pre) changed |= spread(y);
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) changed |= spread(*it);
  }
  return piece;
}

FarthestStructure::Checkpoint FarthestStructure::checkpoint() {
  checkpoints_.push_back({checkpoints_.size() + 1, journal_.size()});
  return checkpoints_.back();
}

void FarthestStructure::rollback(Checkpoint token) {
  if (checkpoints_.empty() || checkpoints_.back().depth != token.depth ||
      checkpoints_.back().journal_size != token.journal_size) {
    throw std::logic_error("rollback out of LIFO order");
  }
  checkpoints_.pop_back();
  while (journal_.size() > token.journal_size) {
    const JournalEntry e = journal_.back();
    journal_.pop_back();
    switch (e.op) {
      case Op::kAlpha:
        alpha_[e.v] = e.old_alpha;
        break;
      case Op::kFlag:
        lcf_.set_terminal(e.v, false);
        alpha_[e.v] = e.old_alpha;
        --terminal_count_;
        break;
      case Op::kLeaf:
      case Op::kSplit:
      case Op::kSteiner:
        if (e.op == Op::kLeaf) {
          lcf_.cut(e.z, e.v);
        } else if (e.op == Op::kSplit) {
          lcf_.cut(e.z, e.v);
          lcf_.cut(e.v, e.u);
          lcf_.link(e.z, e.u);
        } else {
          lcf_.cut(e.y, e.v);
          lcf_.cut(e.y, e.u);
          lcf_.cut(e.z, e.y);
          lcf_.remove_vertex(e.y);
          marks_.unmark(e.y);
          lcf_.link(e.z, e.u);
        }
        lcf_.remove_vertex(e.v);
        marks_.unmark(e.v);
        alpha_[e.v] = e.old_alpha;
        --terminal_count_;
        break;
    }
  }
}

}  // namespace augtree
