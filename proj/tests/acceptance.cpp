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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "augtree/binarize.hpp"
#include "augtree/diameter.hpp"
#include "augtree/lowerbound.hpp"
#include "augtree/solvers.hpp"
#include "support/oracles.hpp"
#include "support/shadow.hpp"

namespace augtree {
namespace {

using testing::Rng;
using testing::Shape;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Best of `reps` wall times; the minimum is the least noisy estimate.
double best_time(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = Clock::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

std::string ratios_text(const std::vector<double>& times, double& worst) {
  std::ostringstream os;
  worst = 0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double r = times[i] / times[i - 1];
    worst = std::max(worst, r);
    os << (i > 1 ? " " : "") << std::fixed;
    os.precision(2);
    os << r;
  }
  return os.str();
}

// Distinct non-tree shortcuts, as many as possible up to k.
ShortcutSet clean_shortcuts(Rng& rng, const Tree& t, int k, Cost max_cost) {
  ShortcutSet s;
  const Vertex n = t.size();
  for (int tries = 0; static_cast<int>(s.size()) < k && tries < 50 * (k + 1); ++tries) {
    if (n < 3) break;
    const Vertex u = testing::pick(rng, 0, n - 1), v = testing::pick(rng, 0, n - 1);
    if (u == v || t.has_edge(u, v)) continue;
    const Shortcut e{std::min(u, v), std::max(u, v), testing::pick_cost(rng, 0, max_cost)};
    if (std::none_of(s.begin(), s.end(), [&](const Shortcut& o) { return o.u == e.u && o.v == e.v; })) s.push_back(e);
  }
  return s;
}

Verdict oracle_equivalence() {
  Rng rng(1001);
  const Shape shapes[] = {Shape::kRandom, Shape::kPath, Shape::kStar, Shape::kCaterpillar, Shape::kBinary, Shape::kBroom};
  int instances = 0, mismatches = 0, binarized = 0, zero_cost = 0;
  for (int round = 0; round < 1200; ++round) {
    Tree t;
    const int family = round % 8;
    if (family < 6) {
      t = testing::random_tree(rng, testing::pick(rng, 2, 300), shapes[family], round % 3 == 0 ? 2 : 9);
    } else if (family == 6) {
      // High-degree tree, binarized first; gadget edges cost 0.
      t = binarize(testing::random_tree(rng, testing::pick(rng, 2, 100), round % 16 < 8 ? Shape::kStar : Shape::kBroom)).tree;
      ++binarized;
    } else {
      t = testing::random_tree(rng, testing::pick(rng, 2, 300), Shape::kRandom, 0);
    }
    const int k = testing::pick(rng, 0, 10);
    const ShortcutSet s = round % 2 ? testing::random_shortcuts(rng, t.size(), k, round % 5 == 0 ? 0 : 9)
                                    : clean_shortcuts(rng, t, k, 9);
    zero_cost += std::any_of(t.edges().begin(), t.edges().end(), [](const Edge& e) { return e.cost == 0; }) ||
                 std::any_of(s.begin(), s.end(), [](const Shortcut& e) { return e.cost == 0; });
    mismatches += graph_diameter(t, s).diam != testing::reference_diameter(t, s);
    ++instances;
  }
  return {mismatches == 0, std::to_string(instances) + " instances (" + std::to_string(binarized) + " binarized, " +
                               std::to_string(zero_cost) + " with zero-cost edges), " + std::to_string(mismatches) +
                               " mismatches"};
}

Verdict path_specialization() {
  Rng rng(1002);
  int mismatches = 0;
  const int instances = 400;
  for (int round = 0; round < instances; ++round) {
    const Tree t = testing::random_tree(rng, testing::pick(rng, 2, 300), Shape::kPath, round % 4 == 0 ? 1 : 9);
    const ShortcutSet s = testing::random_shortcuts(rng, t.size(), testing::pick(rng, 0, 10), round % 3 ? 9 : 2);
    const Cost ref = testing::reference_diameter(t, s);
    mismatches += path_diameter(t, s) != ref || graph_diameter(t, s).diam != ref;
  }
  return {mismatches == 0, std::to_string(instances) + " path instances, " + std::to_string(mismatches) + " mismatches"};
}

Verdict farthest_contract() {
  Rng rng(1003);
  int mismatches = 0;
  const int configs = 600;
  for (int round = 0; round < configs; ++round) {
    const Vertex n = testing::pick(rng, 1, 400);
    const Tree t = round % 2 ? testing::random_binary_tree(rng, n, round % 3 ? 9 : 1)
                             : binarize(testing::random_tree(rng, std::max<Vertex>(1, n / 3), Shape::kRandom, 5)).tree;
    FarthestStructure fs(t);
    std::vector<std::pair<Vertex, Cost>> alpha;
    const int m = testing::pick(rng, 1, std::min<Vertex>(t.size(), 16));
    for (int i = 0; i < m; ++i) {
      const Vertex v = testing::pick(rng, 0, t.size() - 1);
      if (fs.is_terminal(v)) continue;
      fs.make_terminal(v);
      const Cost a = testing::pick_cost(rng, 0, 15);
      fs.set_alpha(v, a);
      alpha.emplace_back(v, a);
    }
    mismatches += fs.report_farthest() != testing::brute_farthest(t, alpha);
  }
  return {mismatches == 0, std::to_string(configs) + " configurations, " + std::to_string(mismatches) +
                               " mismatches in (value, terminal, witness)"};
}

Verdict lower_bound_dichotomy() {
  bool pass = true;
  std::ostringstream os;
  int iab_total = 0;
  for (int n_star : {2, 3, 4}) {
    LowerBoundParams p;
    p.n_star = n_star;
    const FactsReport facts = check_facts(p);
    pass = pass && facts.fact1 && facts.fact2 && facts.fact3;

    // Optimum on sampled I_{a,b}, and fact (3) over every (a,b).
    const LbLayout lay(p);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a : lay.leaves(2))
      for (Vertex b : lay.leaves(3)) pairs.emplace_back(a, b);
    bool fact3_all = true;
    for (const auto& [a, b] : pairs) {
      LowerBoundParams q = p;
      q.variant = LbVariant::kIab;
      q.a = a;
      q.b = b;
      const LbLayout lq(q);
      const Vertex n = lq.vertex_count();
      int differing = 0;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) differing += lq.cost(u, v) != lay.cost(u, v);
      fact3_all = fact3_all && differing == 1 && lq.cost(a, b) == 1;
    }
    Rng rng(1004 + n_star);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(pairs.size(), 5));
    std::vector<Cost> optima;
    for (const auto& [a, b] : pairs) {
      LowerBoundParams q = p;
      q.variant = LbVariant::kIab;
      q.a = a;
      q.b = b;
      Instance inst = gen_lb(q);
      optima.push_back(exact_doat(inst).diam);
      ++iab_total;
    }
    const bool all_nine = std::all_of(optima.begin(), optima.end(), [](Cost c) { return c == 9; });
    pass = pass && fact3_all && all_nine;
    os << "n_star=" << n_star << ": opt(I)=" << facts.fact2_opt << " opt(I_ab)=";
    for (std::size_t i = 0; i < optima.size(); ++i) os << (i ? "," : "") << optima[i];
    os << " cert=" << facts.fact1_diam << " fact3=" << (fact3_all ? "ok" : "FAIL") << "; ";
  }
  pass = pass && iab_total >= 5;
  os << iab_total << " I_ab instances";
  return {pass, os.str()};
}

Verdict approximation_ratios() {
  Rng rng(1005);
  int instances = 0, approx_bad = 0, bound_bad = 0, ptas_bad = 0, certified = 0;
  double worst_approx = 0, worst_ptas = 0;
  for (int round = 0; round < 120; ++round) {
    const int k = round % 2 ? 1 : 2;
    const Vertex n = testing::pick(rng, 4, k == 1 ? 60 : 24);
    Instance inst = gen_random(n, k, rng(), round % 5 == 0 ? RandomFamily::kPathL1 : RandomFamily::kRandomL1);
    const SolveResult opt = exact_doat(inst);
    const SolveResult apx = approx4(inst);
    const SolveResult eps = ptas(inst, 0.5);
    ++instances;
    if (opt.diam == 0) continue;  // every ratio is trivially exact
    const double ra = static_cast<double>(apx.diam) / static_cast<double>(opt.diam);
    const double rp = static_cast<double>(eps.diam) / static_cast<double>(opt.diam);
    worst_approx = std::max(worst_approx, ra);
    worst_ptas = std::max(worst_ptas, rp);
    approx_bad += apx.diam > 4 * opt.diam;
    bound_bad += tree_diameter(inst.tree).diam > (3 * k + 2) * opt.diam;
    if (eps.ptas->certified) {
      ++certified;
      ptas_bad += rp > 1.5;
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << instances << " instances; worst star4 ratio " << worst_approx << ", worst ptas ratio (eps=0.5) " << worst_ptas
     << " logged, " << certified << " satisfy the size precondition; (3k+2) bound violations " << bound_bad;
  return {approx_bad == 0 && bound_bad == 0 && ptas_bad == 0 && instances >= 100, os.str()};
}

Verdict gonzalez_properties() {
  Rng rng(1006);
  int runs = 0, value_bad = 0, spread_bad = 0;
  for (int round = 0; round < 120; ++round) {
    const Vertex n = testing::pick(rng, 1, 400);
    const Tree t = testing::random_tree(rng, n, round % 3 ? Shape::kRandom : Shape::kBroom, round % 4 ? 9 : 1);
    const int h = testing::pick(rng, 1, std::min<Vertex>(n, 12));
    const GonzalezResult g = gonzalez(t, h, testing::pick(rng, 0, n - 1));
    ++runs;
    std::vector<Cost> near(n, std::numeric_limits<Cost>::max());
    Cost min_pair = std::numeric_limits<Cost>::max();
    for (int i = 0; i < h; ++i) {
      const auto d = testing::tree_dists(t, g.picks[i]);
      if (i > 0) value_bad += g.radii[i] != *std::max_element(near.begin(), near.end());
      for (int j = 0; j < i; ++j) min_pair = std::min(min_pair, d[g.picks[j]].cost);
      for (Vertex v = 0; v < n; ++v) near[v] = std::min(near[v], d[v].cost);
    }
    // Spread: every vertex within D = min pairwise pick distance of some pick.
    if (h > 1) spread_bad += *std::max_element(near.begin(), near.end()) > min_pair;
  }
  std::vector<double> times;
  for (int lg = 12; lg <= 16; ++lg) {
    Rng trng(lg);
    const Tree t = testing::random_tree(trng, Vertex{1} << lg, Shape::kRandom);
    times.push_back(best_time(5, [&] { gonzalez(t, 32); }));
  }
  double worst = 0;
  const std::string ratios = ratios_text(times, worst);
  return {value_bad == 0 && spread_bad == 0 && worst <= 2.5,
          std::to_string(runs) + " runs, " + std::to_string(value_bad) + " step mismatches, " +
              std::to_string(spread_bad) + " spread violations; h=32 time ratios per doubling n=2^12..2^16: " + ratios};
}

Verdict scaling_regression() {
  auto time_at = [](int lg, int k) {
    Rng rng(7000 + lg * 31 + k);
    const Tree t = testing::random_tree(rng, Vertex{1} << lg, Shape::kRandom);
    const ShortcutSet s = clean_shortcuts(rng, t, k, 9);
    return best_time(2, [&] { graph_diameter(t, s); });
  };
  std::vector<double> by_n, by_k;
  for (int lg = 13; lg <= 17; ++lg) by_n.push_back(time_at(lg, 8));
  for (int k = 2; k <= 16; k *= 2) by_k.push_back(time_at(15, k));
  double worst_n = 0, worst_k = 0;
  const std::string rn = ratios_text(by_n, worst_n), rk = ratios_text(by_k, worst_k);
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << "k=8 n=2^13..2^17 ratios " << rn << " (" << by_n.front() << "s.." << by_n.back()
     << "s); n=2^15 k=2..16 ratios " << rk;
  return {worst_n <= 2.5 && worst_k <= 2.5, os.str()};
}

Verdict binarization() {
  Rng rng(1008);
  int trees = 0, dist_bad = 0, diam_bad = 0, count_bad = 0;
  for (int round = 0; round < 150; ++round) {
    const Vertex n = testing::pick(rng, 2, 100);
    const Shape shape = round % 3 == 0 ? Shape::kStar : round % 3 == 1 ? Shape::kBroom : Shape::kRandom;
    const Tree t = testing::random_tree(rng, n, shape, round % 2 ? 9 : 1);
    const Binarized b = binarize(t);
    ++trees;
    // Each vertex with h >= 3 children contributes 2h - 2 gadget vertices.
    const auto r = testing::root_tree(t, t.root_or_default());
    std::vector<int> kids(n, 0);
    for (Vertex v = 0; v < n; ++v)
      if (r.parent[v] != kNoVertex) ++kids[r.parent[v]];
    Vertex expected = 0;
    for (int h : kids) expected += h >= 3 ? 2 * h - 2 : 0;
    count_bad += b.added != expected || b.added > 2 * n - 2 || !b.tree.is_binary();
    for (Vertex u = 0; u < n; ++u) {
      const auto before = testing::tree_dists(t, u);
      const auto after = testing::tree_dists(b.tree, b.to_new[u]);
      for (Vertex v = 0; v < n; ++v) dist_bad += before[v].cost != after[b.to_new[v]].cost;
    }
    const ShortcutSet s = testing::random_shortcuts(rng, n, testing::pick(rng, 0, 6));
    ShortcutSet mapped;
    for (const Shortcut& e : s) mapped.push_back({b.to_new[e.u], b.to_new[e.v], e.cost});
    diam_bad += testing::reference_diameter(b.tree, mapped) != testing::reference_diameter(t, s);
  }
  return {dist_bad == 0 && diam_bad == 0 && count_bad == 0,
          std::to_string(trees) + " trees, all pairs checked; " + std::to_string(dist_bad) + " distance, " +
              std::to_string(diam_bad) + " diameter, " + std::to_string(count_bad) + " vertex-count mismatches"};
}

Verdict shadow_scripts() {
  Rng rng(1009);
  const testing::ShadowStats lcf = testing::lcf_shadow(rng, 64, 10000);
  const testing::ShadowStats marks = testing::marked_shadow(rng, 1000, 10000);
  const testing::ShadowStats ecc = testing::ecc_shadow(rng, 48, 10000);
  const int total = lcf.divergences + marks.divergences + ecc.divergences;
  return {total == 0, "link-cut " + std::to_string(lcf.ops) + " ops, marked-ancestor " + std::to_string(marks.ops) +
                          " ops, eccentricity " + std::to_string(ecc.ops) + " ops; " + std::to_string(total) +
                          " divergences"};
}

}  // namespace
}  // namespace augtree

int main() {
  using namespace augtree;
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"oracle equivalence", oracle_equivalence},
      {"path specialization", path_specialization},
      {"farthest-structure contract", farthest_contract},
      {"lower-bound dichotomy", lower_bound_dichotomy},
      {"approximation ratios", approximation_ratios},
      {"gonzalez properties", gonzalez_properties},
      {"scaling regression", scaling_regression},
      {"binarization", binarization},
      {"dynamic-forest shadow tests", shadow_scripts},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::printf("criterion %d %s  %s: %s [%.1fs]\n", index, v.pass ? "PASS" : "FAIL", name, v.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
