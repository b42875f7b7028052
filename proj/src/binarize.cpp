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

#include "augtree/binarize.hpp"

#include <numeric>

namespace augtree {

Binarized binarize(const Tree& tree) {
  const Vertex n = tree.size();
  const Vertex root = tree.root_or_default();

  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const Neighbor& nb : tree.neighbors(order[i])) {
      if (parent[nb.to] == kNoVertex) {
        parent[nb.to] = order[i];
        order.push_back(nb.to);
      }
    }
  }

  Binarized out;
  out.to_new.resize(n);
  std::iota(out.to_new.begin(), out.to_new.end(), 0);
  out.owner = out.to_new;

  std::vector<Edge> edges;
  edges.reserve(3 * static_cast<std::size_t>(n));
  Vertex next_id = n;
  std::vector<Neighbor> children;
  std::vector<Vertex> level, upper;

  for (Vertex v : order) {
    children.clear();
    for (const Neighbor& nb : tree.neighbors(v)) {
      if (v == root || nb.to != parent[v]) children.push_back(nb);
    }
    if (children.size() < 3) {
      for (const Neighbor& c : children) edges.push_back({v, c.to, c.cost});
      continue;
    }
    // Leaves of the gadget, one per child, then pair them up level by level.
    level.clear();
    for (const Neighbor& c : children) {
      const Vertex leaf = next_id++;
      out.owner.push_back(v);
      edges.push_back({leaf, c.to, c.cost});
      level.push_back(leaf);
    }
    while (level.size() > 2) {
      upper.clear();
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        const Vertex inner = next_id++;
        out.owner.push_back(v);
        edges.push_back({inner, level[i], 0});
        edges.push_back({inner, level[i + 1], 0});
        upper.push_back(inner);
      }
      if (level.size() % 2 == 1) upper.push_back(level.back());
      level.swap(upper);
    }
    for (Vertex top : level) edges.push_back({v, top, 0});
  }

  out.added = next_id - n;
  out.tree = Tree(next_id, std::move(edges), root);
  return out;
}

Binarized binarize_preorder(const Tree& tree) {
  const Binarized bin = binarize(tree);
  const Vertex m = bin.tree.size();
  const Vertex root = bin.tree.root_or_default();
  std::vector<Vertex> id(m, kNoVertex), stack{root};
  std::vector<bool> seen(m, false);
  seen[root] = true;
  Vertex next = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    id[x] = next++;
    for (const Neighbor& nb : bin.tree.neighbors(x)) {
      if (!seen[nb.to]) {
        seen[nb.to] = true;
        stack.push_back(nb.to);
      }
    }
  }

  Binarized out;
  out.added = bin.added;
  std::vector<Edge> edges;
  edges.reserve(bin.tree.edges().size());
  for (const Edge& e : bin.tree.edges()) edges.push_back({id[e.u], id[e.v], e.cost});
  out.tree = Tree(m, std::move(edges), id[root]);
  out.to_new.resize(tree.size());
  for (Vertex v = 0; v < tree.size(); ++v) out.to_new[v] = id[bin.to_new[v]];
  out.owner.resize(m);
  for (Vertex x = 0; x < m; ++x) out.owner[id[x]] = bin.owner[x];
  return out;
}

}  // namespace augtree
