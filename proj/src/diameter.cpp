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

#include "augtree/diameter.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <thread>

namespace augtree {
namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max();

using HeapItem = std::pair<Cost, std::int32_t>;
using MinHeap = std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<>>;

void check_endpoints(Vertex n, const ShortcutSet& s) {
  for (const Shortcut& e : s) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw std::out_of_range("shortcut endpoint out of range");
    if (e.cost < 0) throw std::invalid_argument("negative shortcut cost");
  }
}

// Keeps the larger diameter; on ties the smaller source.
void keep_best(DiameterResult& best, const DiameterResult& cand) {
  if (best.u == kNoVertex || cand.diam > best.diam || (cand.diam == best.diam && cand.u < best.u)) best = cand;
}

}  // namespace

std::int32_t CondensedGraph::local(Vertex v) const {
  const auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  return it != vertices.end() && *it == v ? static_cast<std::int32_t>(it - vertices.begin()) : -1;
}

std::vector<Cost> CondensedGraph::distances_from(Vertex source) const {
  std::vector<Cost> dist(vertices.size(), kInf);
  const std::int32_t s = local(source);
  if (s < 0) throw std::invalid_argument("source not in condensed graph");
  MinHeap heap;
  dist[s] = 0;
  heap.emplace(0, s);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    for (const Arc& a : adj[x]) {
      if (d + a.cost < dist[a.to]) {
        dist[a.to] = d + a.cost;
        heap.emplace(dist[a.to], a.to);
      }
    }
  }
  return dist;
}

CondensedGraph build_condensed(const FarthestStructure& fs, const ShortcutSet& s) {
  CondensedGraph g;
  const auto verts = fs.shrunk_vertices();
  g.vertices.assign(verts.begin(), verts.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  g.adj.resize(g.vertices.size());
  auto add = [&](Vertex u, Vertex v, Cost c) {
    const std::int32_t a = g.local(u), b = g.local(v);
    if (a < 0 || b < 0) throw std::logic_error("shortcut endpoint missing from the shrunk tree");
    g.adj[a].push_back({b, c});
    g.adj[b].push_back({a, c});
  };
  for (Vertex v : g.vertices) {
    const Vertex p = fs.shrunk_parent(v);
    if (p != kNoVertex) add(p, v, fs.index().dist_hops(p, v).cost);
  }
  for (const Shortcut& e : s) add(e.u, e.v, e.cost);
  return g;
}

Cost ecc_from_source(FarthestStructure& fs, const ShortcutSet& s, Vertex source) {
  check_endpoints(fs.size(), s);
  const auto cp = fs.checkpoint();
  try {
    if (!fs.is_terminal(source)) fs.make_terminal(source);
    for (const Shortcut& e : s) {
      if (!fs.is_terminal(e.u)) fs.make_terminal(e.u);
      if (!fs.is_terminal(e.v)) fs.make_terminal(e.v);
    }
    const CondensedGraph g = build_condensed(fs, s);
    const std::vector<Cost> d = g.distances_from(source);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      if (fs.is_terminal(g.vertices[i])) fs.set_alpha(g.vertices[i], d[i]);
    }
    const Cost value = fs.report_farthest().value;
    fs.rollback(cp);
    return value;
  } catch (...) {
    fs.rollback(cp);
    throw;
  }
}

// ---------------------------------------------------------------------------
// Reference and special-case algorithms

namespace {

// Farthest vertex from `source` in the tree: (distance, vertex).
std::pair<Cost, Vertex> tree_farthest(const Tree& tree, Vertex source) {
  std::vector<Cost> dist(tree.size(), -1);
  std::vector<Vertex> stack{source};
  dist[source] = 0;
  std::pair<Cost, Vertex> best{0, source};
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    if (dist[x] > best.first || (dist[x] == best.first && x < best.second)) best = {dist[x], x};
    for (const Neighbor& nb : tree.neighbors(x)) {
      if (dist[nb.to] < 0) {
        dist[nb.to] = dist[x] + nb.cost;
        stack.push_back(nb.to);
      }
    }
  }
  return best;
}

}  // namespace

DiameterResult tree_diameter(const Tree& tree) {
  if (tree.size() == 0) return {};
  const Vertex a = tree_farthest(tree, 0).second;
  const auto [d, b] = tree_farthest(tree, a);
  return {d, std::min(a, b), std::max(a, b)};
}

std::vector<Cost> dijkstra_distances(const Tree& tree, const ShortcutSet& s, Vertex source) {
  const Vertex n = tree.size();
  check_endpoints(n, s);
  std::vector<std::vector<Shortcut>> extra(n);
  for (const Shortcut& e : s) {
    extra[e.u].push_back(e);
    extra[e.v].push_back({e.v, e.u, e.cost});
  }
  std::vector<Cost> dist(n, kInf);
  MinHeap heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    auto relax = [&](Vertex y, Cost c) {
      if (d + c < dist[y]) {
        dist[y] = d + c;
        heap.emplace(dist[y], y);
      }
    };
    for (const Neighbor& nb : tree.neighbors(x)) relax(nb.to, nb.cost);
    for (const Shortcut& e : extra[x]) relax(e.v, e.cost);
  }
  return dist;
}

Cost naive_diameter(const Tree& tree, const ShortcutSet& s) {
  Cost best = 0;
  for (Vertex v = 0; v < tree.size(); ++v) {
    const auto d = dijkstra_distances(tree, s, v);
    best = std::max(best, *std::max_element(d.begin(), d.end()));
  }
  return best;
}

Cost path_diameter(const Tree& path, const ShortcutSet& s) {
  const std::vector<Vertex> order = path.path_order();
  const Vertex n = path.size();
  check_endpoints(n, s);
  if (n <= 1) return 0;

  std::vector<std::int32_t> pos(n);
  std::vector<Cost> pre(n, 0);  // prefix cost along the path
  for (Vertex i = 0; i < n; ++i) pos[order[i]] = i;
  for (Vertex i = 1; i < n; ++i) {
    for (const Neighbor& nb : path.neighbors(order[i])) {
      if (nb.to == order[i - 1]) pre[i] = pre[i - 1] + nb.cost;
    }
  }

  std::vector<std::int32_t> endpoints;
  for (const Shortcut& e : s) {
    endpoints.push_back(pos[e.u]);
    endpoints.push_back(pos[e.v]);
  }

  Cost diam = 0;
  std::vector<std::int32_t> term;
  std::vector<std::vector<std::pair<std::int32_t, Cost>>> adj;
  for (std::int32_t ps = 0; ps < n; ++ps) {
    term = endpoints;
    term.push_back(ps);
    std::sort(term.begin(), term.end());
    term.erase(std::unique(term.begin(), term.end()), term.end());
    const std::size_t m = term.size();
    auto idx = [&](std::int32_t p) {
      return static_cast<std::int32_t>(std::lower_bound(term.begin(), term.end(), p) - term.begin());
    };

    // Condensed graph: consecutive terminals plus shortcuts.
    adj.assign(m, {});
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const Cost c = pre[term[j + 1]] - pre[term[j]];
      adj[j].emplace_back(static_cast<std::int32_t>(j + 1), c);
      adj[j + 1].emplace_back(static_cast<std::int32_t>(j), c);
    }
    for (const Shortcut& e : s) {
      const std::int32_t a = idx(pos[e.u]), b = idx(pos[e.v]);
      adj[a].emplace_back(b, e.cost);
      adj[b].emplace_back(a, e.cost);
    }
    std::vector<Cost> dt(m, kInf);
    MinHeap heap;
    dt[idx(ps)] = 0;
    heap.emplace(0, idx(ps));
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d != dt[x]) continue;
      for (const auto& [y, c] : adj[x]) {
        if (d + c < dt[y]) {
          dt[y] = d + c;
          heap.emplace(dt[y], y);
        }
      }
    }

    // Tails beyond the extreme terminals.
    Cost ecc = std::max(dt[0] + pre[term[0]], dt[m - 1] + pre[n - 1] - pre[term[m - 1]]);
    // Stretches between consecutive terminals a = x_1 .. x_L = b.
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const std::int32_t a = term[j], b = term[j + 1];
      auto left = [&](std::int32_t i) { return dt[j] + pre[a + i - 1] - pre[a]; };
      auto right = [&](std::int32_t i) { return dt[j + 1] + pre[b] - pre[a + i - 1]; };
      std::int32_t lo = 2, hi = b - a + 1;  // smallest i >= 2 with left(i) >= right(i)
      while (lo < hi) {
        const std::int32_t mid = lo + (hi - lo) / 2;
        if (left(mid) >= right(mid)) {
          hi = mid;
        } else {
          lo = mid + 1;
        }
      }
      ecc = std::max({ecc, left(lo - 1), right(lo)});
    }
    diam = std::max(diam, ecc);
  }
  return diam;
}

// ---------------------------------------------------------------------------
// DiameterEngine

DiameterEngine::DiameterEngine(const Tree& tree) : tree_(tree) {
  Binarized local = binarize_preorder(tree);
  to_local_ = std::move(local.to_new);
  owner_ = std::move(local.owner);
  fs_ = FarthestStructure(local.tree);
  for (Vertex x = 0; x < static_cast<Vertex>(owner_.size()); ++x) {
    if (to_local_[owner_[x]] == x) sources_.push_back(owner_[x]);
  }
  hot_order_ = sources_;
}

void DiameterEngine::localize(const ShortcutSet& s) {
  check_endpoints(tree_.size(), s);
  local_s_.clear();
  for (const Shortcut& e : s) local_s_.push_back({to_local_[e.u], to_local_[e.v], e.cost});
}

void DiameterEngine::mark_endpoints() {
  for (const Shortcut& e : local_s_) {
    if (!fs_.is_terminal(e.u)) fs_.make_terminal(e.u);
    if (!fs_.is_terminal(e.v)) fs_.make_terminal(e.v);
  }
}

DiameterResult DiameterEngine::eval_source(Vertex source) {
  const Vertex local = to_local_[source];
  const auto cp = fs_.checkpoint();
  if (!fs_.is_terminal(local)) fs_.make_terminal(local);
  const CondensedGraph g = build_condensed(fs_, local_s_);
  const std::vector<Cost> d = g.distances_from(local);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (fs_.is_terminal(g.vertices[i])) fs_.set_alpha(g.vertices[i], d[i]);
  }
  const FarthestReport rep = fs_.report_farthest();
  fs_.rollback(cp);
  return {rep.value, source, owner_[rep.witness]};
}

DiameterResult DiameterEngine::eccentricity(const ShortcutSet& s, Vertex source) {
  if (source < 0 || source >= tree_.size()) throw std::out_of_range("source out of range");
  localize(s);
  const auto cp = fs_.checkpoint();
  mark_endpoints();
  const DiameterResult r = eval_source(source);
  fs_.rollback(cp);
  return r;
}

DiameterResult DiameterEngine::diameter(const ShortcutSet& s, int threads) {
  localize(s);
  if (s.empty()) return tree_diameter(tree_);
  const std::size_t n = sources_.size();
  threads = std::clamp(threads, 1, static_cast<int>(n));
  const auto cp = fs_.checkpoint();
  mark_endpoints();
  DiameterResult best;
  if (threads == 1) {
    for (Vertex v : sources_) keep_best(best, eval_source(v));
  } else {
    // Each worker evaluates every threads-th source on its own copy.
    std::vector<DiameterResult> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        DiameterEngine local = *this;
        for (std::size_t i = t; i < n; i += threads) keep_best(partial[t], local.eval_source(sources_[i]));
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& p : partial) keep_best(best, p);
  }
  fs_.rollback(cp);
  return best;
}

std::optional<DiameterResult> DiameterEngine::diameter_below(const ShortcutSet& s, Cost cutoff) {
  localize(s);
  if (s.empty()) {
    const DiameterResult r = tree_diameter(tree_);
    return r.diam < cutoff ? std::optional(r) : std::nullopt;
  }
  const auto cp = fs_.checkpoint();
  mark_endpoints();
  DiameterResult best;
  for (std::size_t i = 0; i < hot_order_.size(); ++i) {
    const DiameterResult r = eval_source(hot_order_[i]);
    if (r.diam >= cutoff) {
      std::rotate(hot_order_.begin(), hot_order_.begin() + static_cast<std::ptrdiff_t>(i),
                  hot_order_.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      fs_.rollback(cp);
      return std::nullopt;
    }
    keep_best(best, r);
  }
  fs_.rollback(cp);
  return best;
}

DiameterResult graph_diameter(const Tree& tree, const ShortcutSet& s, int threads) {
  check_endpoints(tree.size(), s);
  if (s.empty()) return tree_diameter(tree);
  DiameterEngine engine(tree);
  return engine.diameter(s, threads);
}

}  // namespace augtree
