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

#include "augtree/lowerbound.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <queue>
#include <random>

#include "augtree/diameter.hpp"
#include "augtree/solvers.hpp"

namespace augtree {

Tree lb_tree(const LowerBoundParams& params) {
  const LbLayout lay(params);
  const std::vector<Vertex> z = lay.z_set();
  std::vector<Edge> edges;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j < params.n_star; ++j) {
      const Vertex leaf = lay.leaf(i, j);
      if (i == 1 && std::find(z.begin(), z.end(), leaf) != z.end()) {
        edges.push_back({lay.y(), leaf, 9});
      } else {
        edges.push_back({lay.center(i), leaf, 2});
      }
    }
  }
  for (int i = 1; i <= 3; ++i) {
    edges.push_back({lay.center(i), lay.v_connector(i), 2});
    edges.push_back({lay.v_connector(i), lay.u_connector(i + 1), 2});
    edges.push_back({lay.u_connector(i + 1), lay.center(i + 1), 2});
  }
  return Tree(lay.vertex_count(), std::move(edges));  // default root 0 is center(1)
}

Instance gen_lb(const LowerBoundParams& params) {
  const LbLayout lay(params);
  return Instance{lb_tree(params), CostOracle::lower_bound(lay.params()), params.k};
}

std::vector<Cost> lb_dijkstra_costs(const LowerBoundParams& params) {
  const LbLayout lay(params);
  const Vertex n = lay.vertex_count();
  std::map<std::pair<Vertex, Vertex>, Cost> listed;
  auto add = [&](Vertex u, Vertex v, Cost c) {
    const std::pair<Vertex, Vertex> key = std::minmax(u, v);
    const auto it = listed.find(key);
    if (it == listed.end() || c < it->second) listed[key] = c;
  };
  // Tree of the k = 3 construction; the Z rewiring changes no distance.
  for (int i = 1; i <= 4; ++i) {
    for (Vertex l : lay.leaves(i)) add(lay.center(i), l, 2);
  }
  for (int i = 1; i <= 3; ++i) {
    add(lay.center(i), lay.v_connector(i), 2);
    add(lay.v_connector(i), lay.u_connector(i + 1), 2);
    add(lay.u_connector(i + 1), lay.center(i + 1), 2);
  }
  const auto l2 = lay.leaves(2), l3 = lay.leaves(3);
  for (Vertex y : l2) add(lay.center(1), y, 2);
  for (Vertex y : l3) add(lay.center(4), y, 2);
  const bool cheap = params.variant == LbVariant::kIab;
  for (Vertex y : l2) {
    for (Vertex z : l3) add(y, z, cheap && y == lay.a() && z == lay.b() ? 1 : 2);
  }
  for (const auto* set : {&l2, &l3}) {
    for (std::size_t i = 0; i < set->size(); ++i) {
      for (std::size_t j = i + 1; j < set->size(); ++j) add((*set)[i], (*set)[j], 3);
    }
  }
  for (Vertex y : l3) add(lay.center(2), y, 3);
  for (Vertex y : l2) add(lay.center(3), y, 3);
  for (Vertex y : l3) add(lay.center(1), y, 3);
  for (Vertex y : l2) add(lay.center(4), y, 3);

  std::vector<std::vector<std::pair<Vertex, Cost>>> adj(n);
  for (const auto& [key, c] : listed) {
    adj[key.first].emplace_back(key.second, c);
    adj[key.second].emplace_back(key.first, c);
  }
  std::vector<Cost> out(static_cast<std::size_t>(n) * n);
  using Item = std::pair<Cost, Vertex>;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Cost> dist(n, std::numeric_limits<Cost>::max());
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    heap.emplace(0, s);
    while (!heap.empty()) {
      const auto [d, x] = heap.top();
      heap.pop();
      if (d != dist[x]) continue;
      for (const auto& [y, c] : adj[x]) {
        if (d + c < dist[y]) {
          dist[y] = d + c;
          heap.emplace(dist[y], y);
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      const auto it = listed.find(std::minmax(s, v));
      out[static_cast<std::size_t>(s) * n + v] = it != listed.end() ? it->second : dist[v];
    }
  }
  return out;
}

ShortcutSet lb_certificate(const LowerBoundParams& params) {
  const LbLayout lay(params);
  ShortcutSet s;
  auto add = [&](Vertex u, Vertex v) { s.push_back({std::min(u, v), std::max(u, v), lay.cost(u, v)}); };
  add(lay.center(1), lay.a());
  add(lay.a(), lay.b());
  add(lay.b(), lay.center(4));
  for (Vertex z : lay.z_set()) add(lay.center(1), z);
  std::sort(s.begin(), s.end());
  return s;
}

FactsReport check_facts(const LowerBoundParams& params, double budget, int threads) {
  LowerBoundParams pab = params, pi = params;
  pab.variant = LbVariant::kIab;
  pi.variant = LbVariant::kI;
  FactsReport r;

  const Instance iab = gen_lb(pab);
  r.fact1_diam = graph_diameter(iab.tree, lb_certificate(pab)).diam;
  r.fact1 = r.fact1_diam <= 9;

  Instance ii = gen_lb(pi);
  ExactOptions opts;
  opts.budget = budget;
  opts.threads = threads;
  r.fact2_opt = exact_doat(ii, opts).diam;
  r.fact2 = r.fact2_opt >= 10;

  const LbLayout lay(pab);
  const Vertex n = lay.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (iab.oracle.peek(u, v) != ii.oracle.peek(u, v)) r.differing.emplace_back(u, v);
    }
  }
  r.fact3 = r.differing.size() == 1 && r.differing[0] == std::pair<Vertex, Vertex>(std::minmax(lay.a(), lay.b()));
  return r;
}

std::string to_string(AdversaryAlgo algo) {
  switch (algo) {
    case AdversaryAlgo::kApprox4:
      return "star4";
    case AdversaryAlgo::kPtas:
      return "ptas";
    case AdversaryAlgo::kExact:
      return "exact";
  }
  return "?";
}

QueryReport adversary_experiment(const LowerBoundParams& params, AdversaryAlgo algo,
                                 const AdversaryOptions& options) {
  ExactOptions exact_opts;
  exact_opts.budget = options.budget;
  exact_opts.threads = options.threads;
  auto run = [&](Instance& inst) {
    switch (algo) {
      case AdversaryAlgo::kApprox4:
        return approx4(inst);
      case AdversaryAlgo::kPtas:
        return ptas(inst, options.eps, exact_opts);
      case AdversaryAlgo::kExact:
        break;
    }
    return exact_doat(inst, exact_opts);
  };

  QueryReport report;
  LowerBoundParams pi = params;
  pi.variant = LbVariant::kI;
  Instance base = gen_lb(pi);
  base.oracle.set_query_log(true);
  const SolveResult on_i = run(base);
  report.rows.push_back({"I", params.n_star, params.k, to_string(algo), on_i.oracle_queries, on_i.diam, false});

  const LbLayout lay(pi);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a : lay.leaves(2)) {
    for (Vertex b : lay.leaves(3)) {
      pairs.emplace_back(a, b);
      if (base.oracle.was_queried(a, b)) {
        ++report.queried_pairs;
      } else {
        ++report.unqueried_pairs;
      }
    }
  }
  std::mt19937_64 rng(options.seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min<std::size_t>(pairs.size(), static_cast<std::size_t>(std::max(options.samples, 0))));
  for (const auto& [a, b] : pairs) {
    LowerBoundParams pab = params;
    pab.variant = LbVariant::kIab;
    pab.a = a;
    pab.b = b;
    Instance inst = gen_lb(pab);
    const SolveResult r = run(inst);
    report.rows.push_back({"Iab_" + std::to_string(a) + "_" + std::to_string(b), params.n_star, params.k,
                           to_string(algo), r.oracle_queries, r.diam, r.diam != on_i.diam});
  }
  return report;
}

void write_csv(const QueryReport& report, std::ostream& out) {
  out << "variant,n_star,k,algo,queries,diam,distinguished\n";
  for (const QueryRow& r : report.rows) {
    out << r.variant << ',' << r.n_star << ',' << r.k << ',' << r.algo << ',' << r.queries << ',' << r.diam << ','
        << (r.distinguished ? "true" : "false") << '\n';
  }
}

}  // namespace augtree
