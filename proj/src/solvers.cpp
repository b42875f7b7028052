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

#include "augtree/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "augtree/binarize.hpp"
#include "augtree/farthest.hpp"
#include "json.hpp"

namespace augtree {
namespace {

using Clock = std::chrono::steady_clock;

Cost saturating_add(Cost a, Cost b) { return a > kCostBudget - b ? kCostBudget : a + b; }

}  // namespace

std::string SolveResult::to_json() const {
  nlohmann::ordered_json j;
  j["algo"] = algo;
  j["diam"] = diam;
  j["witness"] = {witness_u, witness_v};
  auto& arr = j["shortcuts"] = nlohmann::ordered_json::array();
  for (const Shortcut& s : shortcuts) arr.push_back({{"u", s.u}, {"v", s.v}, {"cost", s.cost}});
  j["oracle_queries"] = oracle_queries;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  if (ptas) {
    j["ptas"] = {{"eps", ptas->eps},
                 {"eta", ptas->eta},
                 {"branch_count", ptas->branch_count},
                 {"reduced_vertices", ptas->reduced_vertices},
                 {"leaves", ptas->leaves},
                 {"leaf_guard", ptas->leaf_guard},
                 {"certified", ptas->certified}};
  }
  return j.dump(2);
}

// ---------------------------------------------------------------------------
// Gonzalez

GonzalezResult gonzalez(const Tree& tree, int h, Vertex start) {
  const Vertex n = tree.size();
  if (h < 1 || h > n) throw std::invalid_argument("gonzalez needs 1 <= h <= n");
  if (start < 0 || start >= n) throw std::out_of_range("start vertex out of range");
  const Binarized bin = binarize_preorder(tree);
  FarthestStructure fs(bin.tree);
  std::vector<bool> picked(n, false);
  GonzalezResult out;
  auto pick = [&](Vertex x, Cost radius) {
    picked[x] = true;
    out.picks.push_back(x);
    out.radii.push_back(radius);
    fs.make_terminal(bin.to_new[x]);
  };
  pick(start, 0);
  Vertex scan = 0;
  while (static_cast<int>(out.picks.size()) < h) {
    const FarthestReport rep = fs.report_farthest();
    Vertex x = bin.owner[rep.witness];
    if (picked[x]) {
      // Only when every vertex is at distance 0 from some pick.
      while (picked[scan]) ++scan;
      x = scan;
    }
    pick(x, rep.value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact enumeration

double exact_work_estimate(Vertex n, std::uint64_t pairs, int k) {
  const double per = static_cast<double>(n) * k * std::max(1.0, std::log2(static_cast<double>(n)));
  double total = 0, binom = 1;  // C(pairs, j)
  for (int j = 0; j <= k && static_cast<std::uint64_t>(j) <= pairs; ++j) {
    total += binom * per;
    binom = binom * static_cast<double>(pairs - j) / (j + 1);
  }
  return total;
}

namespace {

struct Best {
  Cost diam = 0;
  std::size_t size = 0;
  std::uint64_t rank = 0;  // enumeration index within its size
  ShortcutSet set;
  DiameterResult witness;
  bool valid = false;

  bool beats(const Best& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    return std::tie(diam, size, rank) < std::tie(o.diam, o.size, o.rank);
  }
};

// Enumerates subsets of sizes 1..max_size in lexicographic order; subsets
// whose global index is congruent to `shard` mod `shards` are evaluated.
void enumerate_shard(DiameterEngine& engine, const std::vector<Shortcut>& cand, int max_size, int shard,
                     int shards, Best& best) {
  const std::size_t p = cand.size();
  std::vector<std::size_t> idx;
  ShortcutSet set;
  std::uint64_t global = 0;
  for (int j = 1; j <= max_size; ++j) {
    idx.resize(j);
    std::iota(idx.begin(), idx.end(), 0);
    std::uint64_t rank = 0;
    for (;;) {
      if (static_cast<int>(global % shards) == shard) {
        set.clear();
        for (std::size_t i : idx) set.push_back(cand[i]);
        if (auto r = engine.diameter_below(set, best.diam)) {
          best = {r->diam, static_cast<std::size_t>(j), rank, set, *r, true};
        }
      }
      ++global;
      ++rank;
      // Next combination.
      int i = j - 1;
      while (i >= 0 && idx[i] == p - j + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
}

}  // namespace

SolveResult exact_doat(Instance& inst, const ExactOptions& options) {
  const auto t0 = Clock::now();
  const std::uint64_t q0 = inst.oracle.query_count();
  const Tree& tree = inst.tree;
  const Vertex n = tree.size();
  if (inst.k < 1) throw std::invalid_argument("k must be >= 1");

  std::uint64_t pairs = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs += options.generalized || !tree.has_edge(u, v);
  }
  const double work = exact_work_estimate(n, pairs, inst.k);
  if (work > options.budget) {
    throw BudgetExceeded("exact enumeration needs about " + std::to_string(work) + " steps, budget is " +
                         std::to_string(options.budget));
  }
  std::vector<Shortcut> cand;
  cand.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (options.generalized || !tree.has_edge(u, v)) cand.push_back(make_shortcut(inst.oracle, u, v));
    }
  }

  DiameterEngine engine(tree);
  Best best;
  best.witness = tree_diameter(tree);
  best.diam = best.witness.diam;
  best.valid = true;
  const int max_size = static_cast<int>(std::min<std::uint64_t>(inst.k, cand.size()));
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    enumerate_shard(engine, cand, max_size, 0, 1, best);
  } else {
    std::vector<Best> partial(threads, best);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        DiameterEngine local = engine;
        enumerate_shard(local, cand, max_size, t, threads, partial[t]);
      });
    }
    for (auto& th : pool) th.join();
    for (const Best& b : partial) {
      if (b.beats(best)) best = b;
    }
  }

  SolveResult out;
  out.algo = options.generalized ? "exact-generalized" : "exact";
  out.shortcuts = best.set;
  out.diam = best.diam;
  out.witness_u = best.witness.u;
  out.witness_v = best.witness.v;
  out.oracle_queries = inst.oracle.query_count() - q0;
  out.elapsed = Clock::now() - t0;
  return out;
}

// ---------------------------------------------------------------------------
// 4-approximation

SolveResult approx4(Instance& inst, Vertex start) {
  const auto t0 = Clock::now();
  const std::uint64_t q0 = inst.oracle.query_count();
  const Tree& tree = inst.tree;
  const int h = static_cast<int>(std::min<std::int64_t>(inst.k + 1, tree.size()));
  const GonzalezResult g = gonzalez(tree, h, start);
  SolveResult out;
  out.algo = "star4";
  const Vertex center = g.picks[0];
  for (std::size_t i = 1; i < g.picks.size(); ++i) {
    if (tree.has_edge(center, g.picks[i])) continue;
    out.shortcuts.push_back(make_shortcut(inst.oracle, center, g.picks[i]));
  }
  std::sort(out.shortcuts.begin(), out.shortcuts.end());
  const DiameterResult d = graph_diameter(tree, out.shortcuts);
  out.diam = d.diam;
  out.witness_u = d.u;
  out.witness_v = d.v;
  out.oracle_queries = inst.oracle.query_count() - q0;
  out.elapsed = Clock::now() - t0;
  return out;
}

// ---------------------------------------------------------------------------
// (1+eps) scheme

ReducedInstance build_reduced(Instance& inst, double eps, Vertex start) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  const Tree& tree = inst.tree;
  const Vertex n = tree.size();
  const int k = inst.k;
  const double e = 2.0 * k + 2.0;

  ReducedInstance out;
  out.k = k;
  PtasStats& st = out.stats;
  st.eps = eps;
  st.eta = static_cast<int>(std::ceil(2.0 * std::pow(static_cast<double>(n), 1.0 / e) - 1e-9));
  if (st.eta > n) throw Error("eta = " + std::to_string(st.eta) + " exceeds n = " + std::to_string(n));
  const std::vector<Vertex> branch = tree.branch_vertices();
  st.branch_count = static_cast<int>(branch.size());
  st.leaves = tree.leaf_count();
  st.leaf_guard = std::pow(static_cast<double>(n), 1.0 / (e * e));
  const double lambda = static_cast<double>(std::max<std::size_t>(st.leaves, 1));
  st.certified = std::log(static_cast<double>(n)) > e * std::log(12.0 * lambda * (k + 2.0) * (k + 2.0) / eps);

  const int h = std::clamp(st.eta - st.branch_count, 1, static_cast<int>(n));
  const GonzalezResult g = gonzalez(tree, h, start);
  std::vector<Vertex>& vp = out.to_original;
  vp = branch;
  vp.insert(vp.end(), g.picks.begin(), g.picks.end());
  std::sort(vp.begin(), vp.end());
  vp.erase(std::unique(vp.begin(), vp.end()), vp.end());
  const Vertex m = static_cast<Vertex>(vp.size());
  st.reduced_vertices = m;

  std::vector<Vertex> local(n, kNoVertex);
  for (Vertex i = 0; i < m; ++i) local[vp[i]] = i;

  // One DFS from a V' vertex, remembering the nearest V' ancestor.
  std::vector<Edge> edges;
  struct Frame {
    Vertex v, parent, anchor;
    Cost anchor_dist;
  };
  std::vector<Frame> stack{{vp[0], kNoVertex, vp[0], 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (local[f.v] != kNoVertex && f.v != f.anchor) {
      edges.push_back({local[f.anchor], local[f.v], f.anchor_dist});
      f.anchor = f.v;
      f.anchor_dist = 0;
    }
    for (const Neighbor& nb : tree.neighbors(f.v)) {
      if (nb.to != f.parent) stack.push_back({nb.to, f.v, f.anchor, f.anchor_dist + nb.cost});
    }
  }
  out.tree = Tree(m, std::move(edges), Vertex{0});

  out.shortcut_cost.assign(static_cast<std::size_t>(m) * m, 0);
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) {
      const Cost c = inst.oracle.cost(vp[i], vp[j]);
      out.shortcut_cost[static_cast<std::size_t>(i) * m + j] = c;
      out.shortcut_cost[static_cast<std::size_t>(j) * m + i] = c;
    }
  }
  return out;
}

Instance split_generalized(const ReducedInstance& reduced) {
  const Vertex m = reduced.tree.size();
  const Vertex total = m + static_cast<Vertex>(reduced.tree.edges().size());
  Cost big = 0;
  for (Vertex i = 0; i < m; ++i) {
    for (Vertex j = i + 1; j < m; ++j) big = saturating_add(big, reduced.shortcut_cost[static_cast<std::size_t>(i) * m + j]);
  }
  for (const Edge& e : reduced.tree.edges()) big = saturating_add(big, e.cost);
  big = saturating_add(big, 1);

  std::vector<Edge> edges;
  Vertex next = m;
  for (const Edge& e : reduced.tree.edges()) {
    edges.push_back({e.u, next, 0});
    edges.push_back({next, e.v, e.cost});
    ++next;
  }
  std::vector<Cost> matrix(static_cast<std::size_t>(total) * total, big);
  for (Vertex i = 0; i < total; ++i) {
    for (Vertex j = 0; j < total; ++j) {
      Cost& c = matrix[static_cast<std::size_t>(i) * total + j];
      if (i == j) {
        c = 0;
      } else if (i < m && j < m) {
        c = reduced.shortcut_cost[static_cast<std::size_t>(i) * m + j];
      }
    }
  }
  return Instance{Tree(total, std::move(edges), Vertex{0}), CostOracle::explicit_matrix(total, std::move(matrix)),
                  reduced.k};
}

SolveResult ptas(Instance& inst, double eps, const ExactOptions& options, Vertex start) {
  const auto t0 = Clock::now();
  const std::uint64_t q0 = inst.oracle.query_count();
  const ReducedInstance reduced = build_reduced(inst, eps, start);
  Instance split = split_generalized(reduced);
  ExactOptions inner_opts = options;
  inner_opts.generalized = false;
  const SolveResult inner = exact_doat(split, inner_opts);

  const Vertex m = reduced.tree.size();
  SolveResult out;
  out.algo = "ptas";
  for (const Shortcut& s : inner.shortcuts) {
    if (s.u >= m || s.v >= m) continue;
    const Vertex u = reduced.to_original[s.u], v = reduced.to_original[s.v];
    if (inst.tree.has_edge(u, v)) continue;
    out.shortcuts.push_back({std::min(u, v), std::max(u, v), reduced.shortcut_cost[static_cast<std::size_t>(s.u) * m + s.v]});
  }
  std::sort(out.shortcuts.begin(), out.shortcuts.end());
  const DiameterResult d = graph_diameter(inst.tree, out.shortcuts);
  out.diam = d.diam;
  out.witness_u = d.u;
  out.witness_v = d.v;
  out.ptas = reduced.stats;
  out.oracle_queries = inst.oracle.query_count() - q0;
  out.elapsed = Clock::now() - t0;
  return out;
}

}  // namespace augtree
