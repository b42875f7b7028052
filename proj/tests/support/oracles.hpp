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

// Brute-force reference implementations used only by the test suites.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "augtree/farthest.hpp"
#include "augtree/instance.hpp"
#include "augtree/tree.hpp"

namespace augtree::testing {

using Rng = std::mt19937_64;

enum class Shape { kRandom, kPath, kStar, kCaterpillar, kBinary, kBroom };

inline Vertex pick(Rng& rng, Vertex lo, Vertex hi) {  // inclusive
  return std::uniform_int_distribution<Vertex>(lo, hi)(rng);
}
inline Cost pick_cost(Rng& rng, Cost lo, Cost hi) { return std::uniform_int_distribution<Cost>(lo, hi)(rng); }

/// Random tree of the given shape; vertex ids are shuffled so that shape
/// and numbering are unrelated. Costs uniform in [0, max_cost].
inline Tree random_tree(Rng& rng, Vertex n, Shape shape, Cost max_cost = 9, bool shuffle = true) {
  std::vector<Vertex> parent(n, kNoVertex);
  for (Vertex v = 1; v < n; ++v) {
    switch (shape) {
      case Shape::kRandom:
        parent[v] = pick(rng, 0, v - 1);
        break;
      case Shape::kPath:
        parent[v] = v - 1;
        break;
      case Shape::kStar:
        parent[v] = 0;
        break;
      case Shape::kCaterpillar:  // spine of about half the vertices
        parent[v] = v <= n / 2 ? v - 1 : pick(rng, 0, n / 2);
        break;
      case Shape::kBinary:
        parent[v] = (v - 1) / 2;
        break;
      case Shape::kBroom:  // path then a star at the end
        parent[v] = v <= n / 3 ? v - 1 : n / 3;
        break;
    }
  }
  std::vector<Vertex> perm(n);
  for (Vertex i = 0; i < n; ++i) perm[i] = i;
  if (shuffle) std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({perm[parent[v]], perm[v], pick_cost(rng, 0, max_cost)});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Tree(n, std::move(edges));
}

/// Random binary tree (each vertex gets at most two children w.r.t. root 0).
inline Tree random_binary_tree(Rng& rng, Vertex n, Cost max_cost = 9) {
  std::vector<int> kids(n, 0);
  std::vector<Vertex> open{0};
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const std::size_t i = std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng);
    const Vertex p = open[i];
    edges.push_back({p, v, pick_cost(rng, 0, max_cost)});
    if (++kids[p] == 2) {
      open[i] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }
  return Tree(n, std::move(edges), Vertex{0});
}

inline ShortcutSet random_shortcuts(Rng& rng, Vertex n, int k, Cost max_cost = 9) {
  ShortcutSet s;
  if (n < 2) return s;
  for (int i = 0; i < k; ++i) {
    Vertex u = pick(rng, 0, n - 1), v = pick(rng, 0, n - 2);
    if (v >= u) ++v;
    s.push_back({std::min(u, v), std::max(u, v), pick_cost(rng, 0, max_cost)});
  }
  return s;
}

/// Parent array and depth by BFS from `root`.
struct Rooted {
  std::vector<Vertex> parent;
  std::vector<int> depth;
  std::vector<Cost> dist;
};

inline Rooted root_tree(const Tree& t, Vertex root) {
  Rooted r{std::vector<Vertex>(t.size(), kNoVertex), std::vector<int>(t.size(), -1), std::vector<Cost>(t.size(), 0)};
  std::vector<Vertex> q{root};
  r.depth[root] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (const Neighbor& nb : t.neighbors(q[i])) {
      if (r.depth[nb.to] < 0) {
        r.depth[nb.to] = r.depth[q[i]] + 1;
        r.dist[nb.to] = r.dist[q[i]] + nb.cost;
        r.parent[nb.to] = q[i];
        q.push_back(nb.to);
      }
    }
  }
  return r;
}

inline Vertex naive_lca(const Rooted& r, Vertex u, Vertex v) {
  while (r.depth[u] > r.depth[v]) u = r.parent[u];
  while (r.depth[v] > r.depth[u]) v = r.parent[v];
  while (u != v) {
    u = r.parent[u];
    v = r.parent[v];
  }
  return u;
}

/// (cost, hops) from `s` to every vertex by traversal.
inline std::vector<Dist> tree_dists(const Tree& t, Vertex s) {
  std::vector<Dist> d(t.size(), Dist{-1, -1});
  std::vector<Vertex> st{s};
  d[s] = {0, 0};
  while (!st.empty()) {
    const Vertex x = st.back();
    st.pop_back();
    for (const Neighbor& nb : t.neighbors(x)) {
      if (d[nb.to].hops < 0) {
        d[nb.to] = d[x] + Dist{nb.cost, 1};
        st.push_back(nb.to);
      }
    }
  }
  return d;
}

inline std::vector<Vertex> explicit_path(const Rooted& r, Vertex u, Vertex v) {
  const Vertex w = naive_lca(r, u, v);
  std::vector<Vertex> a, b;
  for (Vertex x = u; x != w; x = r.parent[x]) a.push_back(x);
  a.push_back(w);
  for (Vertex x = v; x != w; x = r.parent[x]) b.push_back(x);
  a.insert(a.end(), b.rbegin(), b.rend());
  return a;
}

/// Floyd-Warshall on T+S.
inline Cost floyd_diameter(const Tree& t, const ShortcutSet& s) {
  const Vertex n = t.size();
  const Cost inf = std::numeric_limits<Cost>::max() / 4;
  std::vector<std::vector<Cost>> d(n, std::vector<Cost>(n, inf));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : t.edges()) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.cost);
  for (const Shortcut& e : s) d[e.u][e.v] = d[e.v][e.u] = std::min(d[e.u][e.v], e.cost);
  for (Vertex m = 0; m < n; ++m)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  Cost best = 0;
  for (auto& row : d) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Dynamic structures

/// Adjacency-map forest with traversal-based queries.
class NaiveForest {
 public:
  explicit NaiveForest(Vertex n) : adj_(n) {}
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  void link(Vertex u, Vertex v, Cost w = 0) {
    adj_[u][v] = w;
    adj_[v][u] = w;
  }
  void cut(Vertex u, Vertex v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  std::vector<Dist> dists(Vertex s) const {
    std::vector<Dist> d(adj_.size(), Dist{-1, -1});
    std::vector<Vertex> st{s};
    d[s] = {0, 0};
    while (!st.empty()) {
      const Vertex x = st.back();
      st.pop_back();
      for (const auto& [y, w] : adj_[x]) {
        if (d[y].hops < 0) {
          d[y] = d[x] + Dist{w, 1};
          st.push_back(y);
        }
      }
    }
    return d;
  }
  bool connected(Vertex u, Vertex v) const { return dists(u)[v].hops >= 0; }
  /// (dist, vertex): max (cost, hops), then min id.
  std::pair<Dist, Vertex> eccentricity(Vertex v) const {
    const auto d = dists(v);
    std::pair<Dist, Vertex> best{Dist{0, 0}, v};
    for (Vertex x = 0; x < static_cast<Vertex>(d.size()); ++x) {
      if (d[x].hops < 0) continue;
      if (d[x] > best.first || (d[x] == best.first && x < best.second)) best = {d[x], x};
    }
    return best;
  }
  Cost diameter(Vertex v) const {
    Cost best = 0;
    const auto d = dists(v);
    for (Vertex x = 0; x < static_cast<Vertex>(d.size()); ++x) {
      if (d[x].hops >= 0) best = std::max(best, eccentricity(x).first.cost);
    }
    return best;
  }
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < static_cast<Vertex>(adj_.size()); ++u)
      for (const auto& [v, w] : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  std::vector<std::map<Vertex, Cost>> adj_;
};

inline std::optional<Vertex> naive_marked_ancestor(const std::vector<Vertex>& parent, const std::vector<bool>& marked,
                                                   Vertex v) {
  for (Vertex x = parent[v]; x != kNoVertex; x = parent[x]) {
    if (marked[x]) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Farthest structure references

/// T(M) from the definition: root plus all pairwise lcas of M.
inline ShrunkTree definitional_shrunk(const Tree& t, Vertex root, const std::vector<Vertex>& terminals) {
  const Rooted r = root_tree(t, root);
  std::set<Vertex> verts{root};
  for (Vertex u : terminals)
    for (Vertex v : terminals) verts.insert(naive_lca(r, u, v));
  ShrunkTree out;
  const std::set<Vertex> term(terminals.begin(), terminals.end());
  for (Vertex v : verts) out.vertices.push_back({v, term.contains(v)});
  for (Vertex v : verts) {
    if (v == root) continue;
    Vertex p = r.parent[v];
    while (!verts.contains(p)) p = r.parent[p];
    out.edges.push_back({p, v, Dist{r.dist[v] - r.dist[p], r.depth[v] - r.depth[p]}});
  }
  std::sort(out.edges.begin(), out.edges.end(),
            [](auto& a, auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

/// max over x of min over terminals t of (alpha_t + d(t,x), hops, t), with
/// the witness maximizing (cost, hops) and then the smallest id.
inline FarthestReport brute_farthest(const Tree& t, const std::vector<std::pair<Vertex, Cost>>& alpha) {
  const Vertex n = t.size();
  std::vector<TieDist> key(n, TieDist{std::numeric_limits<Cost>::max(), 0, kNoVertex});
  for (const auto& [v, a] : alpha) {
    const auto d = tree_dists(t, v);
    for (Vertex x = 0; x < n; ++x) key[x] = std::min(key[x], TieDist{a + d[x].cost, d[x].hops, v});
  }
  FarthestReport out{-1, kNoVertex, kNoVertex};
  std::int64_t hops = -1;
  for (Vertex x = 0; x < n; ++x) {
    if (std::tie(key[x].cost, key[x].hops) > std::tie(out.value, hops)) {
      out = {key[x].cost, key[x].owner, x};
      hops = key[x].hops;
    }
  }
  return out;
}

/// Single-source distances in T+S by Dijkstra, independent of the library.
inline std::vector<Cost> dijkstra_ts(const Tree& t, const ShortcutSet& s, Vertex src) {
  const Vertex n = t.size();
  std::vector<std::vector<std::pair<Vertex, Cost>>> adj(n);
  for (const Edge& e : t.edges()) {
    adj[e.u].emplace_back(e.v, e.cost);
    adj[e.v].emplace_back(e.u, e.cost);
  }
  for (const Shortcut& e : s) {
    adj[e.u].emplace_back(e.v, e.cost);
    adj[e.v].emplace_back(e.u, e.cost);
  }
  std::vector<Cost> d(n, std::numeric_limits<Cost>::max());
  using Item = std::pair<Cost, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  d[src] = 0;
  pq.emplace(0, src);
  while (!pq.empty()) {
    auto [dx, x] = pq.top();
    pq.pop();
    if (dx != d[x]) continue;
    for (auto [y, c] : adj[x]) {
      if (dx + c < d[y]) {
        d[y] = dx + c;
        pq.emplace(d[y], y);
      }
    }
  }
  return d;
}

inline Cost reference_diameter(const Tree& t, const ShortcutSet& s) {
  Cost best = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    const auto d = dijkstra_ts(t, s, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

}  // namespace augtree::testing
