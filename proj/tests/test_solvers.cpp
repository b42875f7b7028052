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

#include <gtest/gtest.h>

#include "augtree/lowerbound.hpp"
#include "augtree/solvers.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

namespace augtree {
namespace {

using testing::Rng;
using testing::Shape;

Tree unit_path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v, 1});
  return Tree(n, e);
}

// max over v of min over the first `count` picks of d_T(pick, v).
Cost brute_max_min(const Tree& t, const std::vector<Vertex>& picks, std::size_t count) {
  std::vector<Cost> best(t.size(), std::numeric_limits<Cost>::max());
  for (std::size_t i = 0; i < count; ++i) {
    const auto d = testing::tree_dists(t, picks[i]);
    for (Vertex v = 0; v < t.size(); ++v) best[v] = std::min(best[v], d[v].cost);
  }
  return *std::max_element(best.begin(), best.end());
}

// Every subset of at most k pairs drawn from `pairs`, scored by the naive oracle.
Cost brute_optimum(const Tree& t, const ShortcutSet& pairs, int k) {
  Cost best = testing::reference_diameter(t, {});
  ShortcutSet cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty()) best = std::min(best, testing::reference_diameter(t, cur));
    if (static_cast<int>(cur.size()) == k) return;
    for (std::size_t i = from; i < pairs.size(); ++i) {
      cur.push_back(pairs[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

Instance metric_instance(Rng& rng, Vertex n, int k) {
  return gen_random(n, k, rng(), testing::pick(rng, 0, 3) == 0 ? RandomFamily::kPathL1 : RandomFamily::kRandomL1);
}

TEST(Gonzalez, PathPicksFarEnd) {
  const GonzalezResult g = gonzalez(unit_path(5), 2, 0);
  EXPECT_EQ(g.picks, (std::vector<Vertex>{0, 4}));
  EXPECT_EQ(g.radii, (std::vector<Cost>{0, 4}));
}

TEST(Gonzalez, AllVertices) {
  Rng rng(7);
  const Tree t = testing::random_tree(rng, 30, Shape::kRandom);
  const GonzalezResult g = gonzalez(t, 30, 3);
  std::vector<Vertex> sorted = g.picks;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v = 0; v < 30; ++v) EXPECT_EQ(sorted[v], v);
}

TEST(Gonzalez, RejectsBadArguments) {
  EXPECT_THROW(gonzalez(unit_path(3), 0), std::invalid_argument);
  EXPECT_THROW(gonzalez(unit_path(3), 4), std::invalid_argument);
  EXPECT_THROW(gonzalez(unit_path(3), 1, 3), std::out_of_range);
}

TEST(Gonzalez, StepValuesMatchBruteForceAndSpread) {
  Rng rng(11);
  for (int round = 0; round < 100; ++round) {
    const Vertex n = testing::pick(rng, 1, 400);
    const Tree t = testing::random_tree(rng, n, round % 3 ? Shape::kRandom : Shape::kCaterpillar,
                                        round % 4 ? 9 : 0);
    const int h = testing::pick(rng, 1, std::min<Vertex>(12, n));
    const GonzalezResult g = gonzalez(t, h, testing::pick(rng, 0, n - 1));
    ASSERT_EQ(g.picks.size(), static_cast<std::size_t>(h));
    for (int i = 1; i < h; ++i) ASSERT_EQ(g.radii[i], brute_max_min(t, g.picks, i)) << "round " << round;
    // Radii never grow, and every vertex lies within the last radius of a pick.
    for (int i = 2; i < h; ++i) ASSERT_LE(g.radii[i], g.radii[i - 1]);
    if (h > 1) ASSERT_LE(brute_max_min(t, g.picks, h), g.radii[h - 1]);
  }
}

TEST(ExactDoat, UnitPathJoinsEnds) {
  Instance inst{unit_path(4), CostOracle::explicit_matrix(4, {0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0}), 1};
  const SolveResult r = exact_doat(inst);
  EXPECT_EQ(r.diam, 2);
  ASSERT_EQ(r.shortcuts.size(), 1u);
  EXPECT_EQ(testing::reference_diameter(inst.tree, r.shortcuts), 2);
}

TEST(ExactDoat, K1MatchesIndependentEnumerator) {
  Rng rng(13);
  for (int round = 0; round < 20; ++round) {
    Instance inst = metric_instance(rng, testing::pick(rng, 2, 40), 1);
    Cost best = testing::reference_diameter(inst.tree, {});
    const Vertex n = inst.tree.size();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!inst.tree.has_edge(u, v)) {
          best = std::min(best, testing::reference_diameter(inst.tree, {{u, v, inst.oracle.peek(u, v)}}));
        }
      }
    }
    const SolveResult r = exact_doat(inst);
    ASSERT_EQ(r.diam, best) << "round " << round;
    ASSERT_EQ(testing::reference_diameter(inst.tree, r.shortcuts), r.diam);
    ASSERT_NO_THROW(validate_shortcuts(inst.tree, r.shortcuts, 1));
  }
}

TEST(ExactDoat, ThreadedAgreesWithSequential) {
  Rng rng(17);
  for (int round = 0; round < 5; ++round) {
    Instance a = metric_instance(rng, testing::pick(rng, 4, 14), 2);
    Instance b = a;
    ExactOptions opts;
    opts.threads = 3;
    const SolveResult seq = exact_doat(a), par = exact_doat(b, opts);
    EXPECT_EQ(seq.diam, par.diam);
    EXPECT_EQ(seq.shortcuts, par.shortcuts);
  }
}

TEST(ExactDoat, BudgetGuard) {
  Instance inst = gen_random(60, 3, 1);
  ExactOptions opts;
  opts.budget = 1e6;
  EXPECT_THROW(exact_doat(inst, opts), BudgetExceeded);
  EXPECT_EQ(inst.oracle.query_count(), 0u);
}

TEST(ExactDoat, LowerBoundCertificateInstance) {
  LowerBoundParams p;
  p.n_star = 2;
  p.variant = LbVariant::kIab;
  Instance inst = gen_lb(p);
  EXPECT_EQ(exact_doat(inst).diam, 9);
}

TEST(Approx4, K1OnPathIsSingleShortcut) {
  Instance inst = gen_random(20, 1, 5, RandomFamily::kPathL1);
  const SolveResult r = approx4(inst);
  const GonzalezResult g = gonzalez(inst.tree, 2);
  ASSERT_EQ(r.shortcuts.size(), 1u);
  EXPECT_EQ(r.shortcuts[0].u, std::min(g.picks[0], g.picks[1]));
  EXPECT_EQ(r.shortcuts[0].v, std::max(g.picks[0], g.picks[1]));
  EXPECT_EQ(r.oracle_queries, 1u);
}

TEST(Approx4, RatioAndTreeDiameterBound) {
  Rng rng(19);
  for (int round = 0; round < 60; ++round) {
    const int k = testing::pick(rng, 1, 3);
    const Vertex n = testing::pick(rng, 2, k == 1 ? 40 : k == 2 ? 18 : 10);
    Instance inst = metric_instance(rng, n, k);
    const SolveResult opt = exact_doat(inst);
    inst.oracle.reset_query_count();
    const SolveResult apx = approx4(inst);
    ASSERT_NO_THROW(validate_shortcuts(inst.tree, apx.shortcuts, k));
    ASSERT_LE(apx.oracle_queries, static_cast<std::uint64_t>(k));
    ASSERT_EQ(apx.diam, testing::reference_diameter(inst.tree, apx.shortcuts));
    ASSERT_LE(apx.diam, 4 * opt.diam) << "round " << round;
    ASSERT_LE(tree_diameter(inst.tree).diam, (3 * k + 2) * opt.diam);
  }
}

TEST(Approx4, LowerBoundQueryAudit) {
  LowerBoundParams p;
  p.n_star = 50;
  Instance inst = gen_lb(p);
  EXPECT_EQ(approx4(inst).oracle_queries, 3u);
}

TEST(BuildReduced, PathEta) {
  Instance inst = gen_random(256, 1, 3, RandomFamily::kPathL1);
  const ReducedInstance r = build_reduced(inst, 0.5);
  EXPECT_EQ(r.stats.eta, 8);
  EXPECT_EQ(r.stats.branch_count, 0);
  EXPECT_EQ(r.stats.reduced_vertices, 8);
  EXPECT_EQ(r.tree.size(), 8);
  EXPECT_TRUE(r.tree.is_path());
}

TEST(BuildReduced, StarKeepsCenter) {
  Instance inst{Tree(6, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, {0, 5, 1}}),
                CostOracle::explicit_matrix(6, {0, 1, 1, 1, 1, 1, 1, 0, 2, 2, 2, 2, 1, 2, 0, 2, 2, 2,
                                                1, 2, 2, 0, 2, 2, 1, 2, 2, 2, 0, 2, 1, 2, 2, 2, 2, 0}),
                1};
  const ReducedInstance r = build_reduced(inst, 0.5, 1);
  EXPECT_EQ(r.stats.branch_count, 1);
  EXPECT_NE(std::find(r.to_original.begin(), r.to_original.end(), 0), r.to_original.end());
}

TEST(BuildReduced, EtaAboveNThrows) {
  Instance inst = gen_random(2, 1, 0);
  EXPECT_THROW(build_reduced(inst, 0.5), Error);
}

TEST(BuildReduced, EdgeCostsAreTreeDistances) {
  Rng rng(23);
  for (int round = 0; round < 30; ++round) {
    const int k = testing::pick(rng, 1, 2);
    Instance inst = metric_instance(rng, testing::pick(rng, 16, 400), k);
    const ReducedInstance r = build_reduced(inst, 0.5, testing::pick(rng, 0, inst.tree.size() - 1));
    ASSERT_EQ(r.tree.size(), static_cast<Vertex>(r.to_original.size()));
    ASSERT_TRUE(std::is_sorted(r.to_original.begin(), r.to_original.end()));
    for (Vertex b : inst.tree.branch_vertices()) {
      ASSERT_TRUE(std::binary_search(r.to_original.begin(), r.to_original.end(), b));
    }
    for (const Edge& e : r.tree.edges()) {
      const auto d = testing::tree_dists(inst.tree, r.to_original[e.u]);
      ASSERT_EQ(e.cost, d[r.to_original[e.v]].cost);
    }
    const Vertex m = r.tree.size();
    for (Vertex i = 0; i < m; ++i) {
      for (Vertex j = 0; j < m; ++j) {
        ASSERT_EQ(r.shortcut_cost[static_cast<std::size_t>(i) * m + j],
                  inst.oracle.peek(r.to_original[i], r.to_original[j]));
      }
    }
  }
}

TEST(SplitGeneralized, SingleEdge) {
  ReducedInstance r;
  r.tree = Tree(2, {{0, 1, 7}});
  r.to_original = {0, 1};
  r.shortcut_cost = {0, 4, 4, 0};
  const Instance s = split_generalized(r);
  ASSERT_EQ(s.tree.size(), 3);
  EXPECT_TRUE(s.tree.is_path());
  EXPECT_EQ(s.tree.edges(), (std::vector<Edge>{{0, 2, 0}, {2, 1, 7}}));
  EXPECT_EQ(s.oracle.peek(0, 1), 4);
  EXPECT_GT(s.oracle.peek(0, 2), 4 + 7);
}

TEST(SplitGeneralized, MatchesDirectGeneralizedEnumeration) {
  Rng rng(29);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    const int k = testing::pick(rng, 1, 2);
    Instance inst = metric_instance(rng, testing::pick(rng, 10, 200), k);
    const ReducedInstance r = build_reduced(inst, 0.5, 0);
    if (r.tree.size() > 10) continue;
    ++checked;
    const Vertex m = r.tree.size();
    ShortcutSet all;
    for (Vertex i = 0; i < m; ++i) {
      for (Vertex j = i + 1; j < m; ++j) all.push_back({i, j, r.shortcut_cost[static_cast<std::size_t>(i) * m + j]});
    }
    Instance split = split_generalized(r);
    ASSERT_EQ(exact_doat(split).diam, brute_optimum(r.tree, all, k)) << "round " << round;

    Instance direct{r.tree, CostOracle::explicit_matrix(m, r.shortcut_cost), k};
    ExactOptions gen;
    gen.generalized = true;
    ASSERT_EQ(exact_doat(direct, gen).diam, brute_optimum(r.tree, all, k));
  }
  EXPECT_GE(checked, 15);
}

TEST(Ptas, HugeEpsStillValid) {
  Instance inst = gen_random(12, 2, 9);
  const SolveResult r = ptas(inst, 1e3);
  ASSERT_TRUE(r.ptas.has_value());
  EXPECT_NO_THROW(validate_shortcuts(inst.tree, r.shortcuts, 2));
  EXPECT_EQ(r.diam, testing::reference_diameter(inst.tree, r.shortcuts));
}

TEST(Ptas, PathsRatioWithinFour) {
  Rng rng(31);
  for (int round = 0; round < 30; ++round) {
    Instance inst = gen_random(testing::pick(rng, 2, 60), 1, rng(), RandomFamily::kPathL1);
    const SolveResult opt = exact_doat(inst);
    const SolveResult r = ptas(inst, 0.5);
    ASSERT_NO_THROW(validate_shortcuts(inst.tree, r.shortcuts, 1));
    ASSERT_EQ(r.diam, testing::reference_diameter(inst.tree, r.shortcuts));
    ASSERT_LE(r.diam, 4 * opt.diam);
    if (r.ptas->certified) ASSERT_LE(static_cast<double>(r.diam), 1.5 * static_cast<double>(opt.diam));
  }
}

TEST(SolveResult, Json) {
  Instance inst = gen_random(8, 1, 2);
  const auto j = nlohmann::json::parse(approx4(inst).to_json());
  EXPECT_EQ(j["algo"], "star4");
  EXPECT_TRUE(j.contains("diam"));
  EXPECT_EQ(j["witness"].size(), 2u);
  EXPECT_FALSE(j.contains("ptas"));
  Instance inst2 = gen_random(20, 1, 2);
  EXPECT_TRUE(nlohmann::json::parse(ptas(inst2, 0.5).to_json()).contains("ptas"));
}

}  // namespace
}  // namespace augtree
