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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "augtree/instance.hpp"
#include "augtree/lb_layout.hpp"

namespace augtree {

/// Four stars of n_star vertices whose centers are chained by three-edge
/// paths; every edge costs 2. For k > 3 the leaves in Z hang from y with an
/// edge of cost 9 instead of from the first center.
Tree lb_tree(const LowerBoundParams& params);

/// Lower-bound instance with the closed-form oracle; k = params.k.
Instance gen_lb(const LowerBoundParams& params);

/// The same costs computed from scratch: listed edges keep their price,
/// every other pair gets its shortest-path distance in the defining graph.
/// Row-major n x n.
std::vector<Cost> lb_dijkstra_costs(const LowerBoundParams& params);

/// The certificate set for I_{a,b}: (x1,a), (a,b), (b,x4) and (x1,z) for z in Z.
ShortcutSet lb_certificate(const LowerBoundParams& params);

struct FactsReport {
  Cost fact1_diam = 0;  // diam(T+S) for the certificate set on I_{a,b}
  bool fact1 = false;   // <= 9
  Cost fact2_opt = 0;   // exact optimum on I
  bool fact2 = false;   // >= 10
  std::vector<std::pair<Vertex, Vertex>> differing;  // pairs priced differently in I and I_{a,b}
  bool fact3 = false;   // exactly {(a,b)}
};

/// Checks the three facts of the construction; fact (2) by exhaustive
/// enumeration, so n_star must be small. Throws BudgetExceeded.
FactsReport check_facts(const LowerBoundParams& params, double budget = 1e10, int threads = 1);

enum class AdversaryAlgo { kApprox4, kPtas, kExact };

struct QueryRow {
  std::string variant;  // "I" or "Iab_<a>_<b>"
  int n_star = 0;
  int k = 0;
  std::string algo;
  std::uint64_t queries = 0;
  Cost diam = 0;
  bool distinguished = false;  // output diameter differs from the run on I
};

struct QueryReport {
  std::vector<QueryRow> rows;
  std::uint64_t queried_pairs = 0;    // L2 x L3 pairs whose cost was looked up on I
  std::uint64_t unqueried_pairs = 0;  // the rest of L2 x L3
};

struct AdversaryOptions {
  int samples = 5;  // sampled (a,b) pairs
  std::uint64_t seed = 0;
  double eps = 0.5;
  double budget = 1e10;
  int threads = 1;
};

/// Runs `algo` on I and on sampled I_{a,b} and reports query counts.
QueryReport adversary_experiment(const LowerBoundParams& params, AdversaryAlgo algo,
                                 const AdversaryOptions& options = {});

std::string to_string(AdversaryAlgo algo);
/// Header `variant,n_star,k,algo,queries,diam,distinguished`.
void write_csv(const QueryReport& report, std::ostream& out);

}  // namespace augtree
