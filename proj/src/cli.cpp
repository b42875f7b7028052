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

#include "augtree/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "augtree/diameter.hpp"
#include "augtree/instance_io.hpp"
#include "augtree/lowerbound.hpp"
#include "augtree/solvers.hpp"
#include "json.hpp"

namespace augtree::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ShortcutLiteral {
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Cost> cost;
};

template <typename T>
T parse_number(std::string_view s, const std::string& what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError("bad " + what + " '" + std::string(s) + "'");
  }
  return value;
}

// "u-v[:cost],..." with optional costs.
std::vector<ShortcutLiteral> parse_shortcuts(const std::string& text) {
  std::vector<ShortcutLiteral> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string_view sv(item);
    const auto dash = sv.find('-');
    if (dash == std::string_view::npos) throw UsageError("shortcut '" + item + "' is not of the form u-v[:cost]");
    const auto colon = sv.find(':', dash);
    ShortcutLiteral lit;
    lit.u = parse_number<Vertex>(sv.substr(0, dash), "vertex");
    lit.v = parse_number<Vertex>(sv.substr(dash + 1, colon == std::string_view::npos ? sv.npos : colon - dash - 1),
                                 "vertex");
    if (colon != std::string_view::npos) lit.cost = parse_number<Cost>(sv.substr(colon + 1), "cost");
    out.push_back(lit);
  }
  return out;
}

ShortcutSet resolve_shortcuts(Instance& inst, const std::vector<ShortcutLiteral>& lits) {
  ShortcutSet s;
  for (const ShortcutLiteral& l : lits) {
    const Vertex n = inst.tree.size();
    if (l.u < 0 || l.u >= n || l.v < 0 || l.v >= n) throw std::invalid_argument("shortcut endpoint out of range");
    if (l.cost) {
      s.push_back({std::min(l.u, l.v), std::max(l.u, l.v), *l.cost});
    } else {
      s.push_back(make_shortcut(inst.oracle, l.u, l.v));
    }
  }
  validate_shortcuts(inst.tree, s, static_cast<int>(s.size()));
  return s;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  return file;
}

RandomFamily random_family(const std::string& family) {
  return family == "path-l1" ? RandomFamily::kPathL1 : RandomFamily::kRandomL1;
}

LowerBoundParams lb_params(const RunConfig& cfg) {
  LowerBoundParams p;
  p.n_star = cfg.n_star;
  p.k = cfg.family == "lb3" ? 3 : cfg.k;
  p.variant = cfg.variant == "Iab" ? LbVariant::kIab : LbVariant::kI;
  return p;
}

std::string gonzalez_json(const GonzalezResult& g, std::chrono::nanoseconds elapsed) {
  nlohmann::ordered_json j;
  j["algo"] = "gonzalez";
  j["picks"] = g.picks;
  j["radii"] = g.radii;
  j["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  return j.dump(2);
}

ExactOptions exact_options(const RunConfig& cfg) {
  ExactOptions o;
  o.budget = cfg.budget;
  o.threads = cfg.threads;
  return o;
}

Instance generate(const RunConfig& cfg) {
  if (cfg.family == "lb3" || cfg.family == "lbk") return gen_lb(lb_params(cfg));
  if (cfg.n < 2 || cfg.n > (std::int64_t{1} << 30)) throw UsageError("--n must be in [2, 2^30]");
  return gen_random(static_cast<Vertex>(cfg.n), cfg.k, cfg.seed, random_family(cfg.family));
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = generate(cfg);
  save_instance(inst, cfg.output);
  out << "wrote " << cfg.output << ": n=" << inst.tree.size() << " k=" << inst.k << " family=" << cfg.family << '\n';
  return kExitOk;
}

int cmd_diam(const RunConfig& cfg, std::ostream& out) {
  Instance inst = load_instance(cfg.input);
  const ShortcutSet s = resolve_shortcuts(inst, parse_shortcuts(cfg.shortcuts));
  const DiameterResult d = graph_diameter(inst.tree, s, cfg.threads);
  out << "diameter " << d.diam << '\n' << "witness " << d.u << ' ' << d.v << '\n';
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  Instance inst = load_instance(cfg.input);
  std::string json;
  std::string summary;
  if (cfg.algo == "gonzalez") {
    const int h = cfg.h > 0 ? cfg.h : static_cast<int>(std::min<std::int64_t>(inst.k + 1, inst.tree.size()));
    const auto t0 = std::chrono::steady_clock::now();
    const GonzalezResult g = gonzalez(inst.tree, h);
    json = gonzalez_json(g, std::chrono::steady_clock::now() - t0);
    summary = "gonzalez: " + std::to_string(g.picks.size()) + " picks, last radius " + std::to_string(g.radii.back());
  } else {
    SolveResult r;
    if (cfg.algo == "exact") {
      r = exact_doat(inst, exact_options(cfg));
    } else if (cfg.algo == "star4") {
      r = approx4(inst);
    } else {
      r = ptas(inst, cfg.eps, exact_options(cfg));
    }
    json = r.to_json();
    summary = r.algo + ": diameter " + std::to_string(r.diam) + " with " + std::to_string(r.shortcuts.size()) +
              " shortcuts, " + std::to_string(r.oracle_queries) + " oracle queries";
  }
  if (cfg.output.empty()) {
    out << json << '\n';
  } else {
    std::ofstream file;
    open_output(cfg.output, file, out) << json << '\n';
    out << summary << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = load_instance(cfg.input);
  validate_instance(inst);
  const Vertex n = inst.tree.size();
  out << "instance: n=" << n << " k=" << inst.k << " leaves=" << inst.tree.leaf_count()
      << " branch=" << inst.tree.branch_vertices().size() << " path=" << (inst.tree.is_path() ? "yes" : "no") << '\n';
  MetricCheck m;
  if (n >= 3) m = cfg.full ? verify_metric(inst.oracle, n) : verify_metric_sampled(inst.oracle, n, 100000, cfg.seed);
  if (!m.ok) {
    const MetricViolation& v = *m.violation;
    out << "metric: violated, c(" << v.u << ',' << v.v << ") > c(" << v.u << ',' << v.w << ") + c(" << v.w << ','
        << v.v << ")\n";
    return kExitDomain;
  }
  out << "metric: ok (" << (cfg.full ? "all triples" : "sampled") << ")\n";
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out) {
  if (cfg.sizes.empty()) throw UsageError("--sizes needs at least one size");
  for (std::int64_t n : cfg.sizes) {
    if (n < 2 || n > (std::int64_t{1} << 30)) throw UsageError("sizes must be in [2, 2^30]");
  }
  std::ofstream file;
  std::ostream& csv = open_output(cfg.output, file, out);
  csv << "algo,n,k,rep,seconds,value,queries\n";
  for (std::int64_t size : cfg.sizes) {
    const auto n = static_cast<Vertex>(size);
    for (int rep = 0; rep < cfg.reps; ++rep) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(rep);
      Instance inst = gen_random(n, cfg.k, seed, random_family(cfg.family));
      Cost value = 0;
      const auto t0 = std::chrono::steady_clock::now();
      if (cfg.algo == "diam") {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        ShortcutSet s;
        for (int tries = 0; static_cast<int>(s.size()) < cfg.k && tries < 64 * cfg.k; ++tries) {
          const Vertex u = pick(rng), v = pick(rng);
          if (u == v || inst.tree.has_edge(u, v)) continue;
          const Shortcut e{std::min(u, v), std::max(u, v), 0};
          if (std::any_of(s.begin(), s.end(), [&](const Shortcut& o) { return o.u == e.u && o.v == e.v; })) continue;
          s.push_back(make_shortcut(inst.oracle, e.u, e.v));
        }
        value = graph_diameter(inst.tree, s, cfg.threads).diam;
      } else if (cfg.algo == "gonzalez") {
        value = gonzalez(inst.tree, std::min<int>(cfg.h > 0 ? cfg.h : cfg.k + 1, n)).radii.back();
      } else if (cfg.algo == "star4") {
        value = approx4(inst).diam;
      } else if (cfg.algo == "ptas") {
        value = ptas(inst, cfg.eps, exact_options(cfg)).diam;
      } else {
        value = exact_doat(inst, exact_options(cfg)).diam;
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      csv << cfg.algo << ',' << n << ',' << cfg.k << ',' << rep << ',' << secs << ',' << value << ','
          << inst.oracle.query_count() << '\n';
    }
  }
  return kExitOk;
}

int cmd_adversary(const RunConfig& cfg, std::ostream& out) {
  AdversaryOptions opts;
  opts.samples = cfg.samples;
  opts.seed = cfg.seed;
  opts.eps = cfg.eps;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  const AdversaryAlgo algo = cfg.algo == "star4" ? AdversaryAlgo::kApprox4
                             : cfg.algo == "ptas" ? AdversaryAlgo::kPtas
                                                  : AdversaryAlgo::kExact;
  const QueryReport report = adversary_experiment(lb_params(cfg), algo, opts);
  std::ofstream file;
  write_csv(report, open_output(cfg.output, file, out));
  if (!cfg.output.empty()) {
    out << "L2 x L3 pairs queried on I: " << report.queried_pairs << " of "
        << report.queried_pairs + report.unqueried_pairs << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Diameter-optimal tree augmentation toolkit", argv.empty() ? "augtree" : argv[0]};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "Random seed");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 1024));

  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", cfg.family)->required()->check(CLI::IsMember({"random-l1", "path-l1", "lb3", "lbk"}));
  gen->add_option("--n", cfg.n, "Vertex count (random families)");
  gen->add_option("--n-star", cfg.n_star, "Vertices per star (lower-bound families)");
  auto* gen_k = gen->add_option("--k", cfg.k, "Shortcut budget")->check(CLI::PositiveNumber);
  gen->add_option("--variant", cfg.variant, "Lower-bound variant")->check(CLI::IsMember({"I", "Iab"}));
  gen->add_option("-o,--output", cfg.output)->required();

  auto* diam = app.add_subcommand("diam", "Diameter of T plus shortcuts");
  diam->add_option("-i,--input", cfg.input)->required();
  diam->add_option("-s,--shortcuts", cfg.shortcuts, "u-v[:cost],...");

  auto* solve = app.add_subcommand("solve", "Run a solver");
  solve->set_help_flag("--help", "Print this help message and exit");  // frees --h
  solve->add_option("-i,--input", cfg.input)->required();
  solve->add_option("--algo", cfg.algo)->required()->check(CLI::IsMember({"exact", "star4", "ptas", "gonzalez"}));
  solve->add_option("--eps", cfg.eps)->check(CLI::PositiveNumber);
  solve->add_option("--h", cfg.h, "Gonzalez picks (default k+1)")->check(CLI::PositiveNumber);
  solve->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", cfg.output);

  auto* verify = app.add_subcommand("verify", "Check an instance file");
  verify->add_option("-i,--input", cfg.input)->required();
  verify->add_flag("--full", cfg.full, "Check every triple");

  auto* bench = app.add_subcommand("bench", "Time an algorithm on random instances");
  bench->set_help_flag("--help", "Print this help message and exit");
  bench->add_option("--algo", cfg.algo)->required()->check(
      CLI::IsMember({"diam", "gonzalez", "star4", "ptas", "exact"}));
  bench->add_option("--sizes", cfg.sizes)->required()->delimiter(',');
  bench->add_option("--k", cfg.k)->check(CLI::PositiveNumber);
  bench->add_option("--reps", cfg.reps)->check(CLI::PositiveNumber);
  bench->add_option("--family", cfg.family)->check(CLI::IsMember({"random-l1", "path-l1"}));
  bench->add_option("--h", cfg.h)->check(CLI::PositiveNumber);
  bench->add_option("--eps", cfg.eps)->check(CLI::PositiveNumber);
  bench->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", cfg.output);

  auto* adv = app.add_subcommand("adversary", "Query audit on the lower-bound family");
  adv->add_option("--family", cfg.family)->required()->check(CLI::IsMember({"lb3", "lbk"}));
  adv->add_option("--n-star", cfg.n_star)->required();
  auto* adv_k = adv->add_option("--k", cfg.k)->check(CLI::PositiveNumber);
  adv->add_option("--algo", cfg.algo)->required()->check(CLI::IsMember({"star4", "ptas", "exact"}));
  adv->add_option("--samples", cfg.samples)->check(CLI::NonNegativeNumber);
  adv->add_option("--eps", cfg.eps)->check(CLI::PositiveNumber);
  adv->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  adv->add_option("-o,--output", cfg.output);

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend());
    if (!args.empty()) args.pop_back();
    app.parse(args);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    if (cfg.family.empty()) cfg.family = "random-l1";
    if (cfg.family == "lb3" && ((cfg.subcommand == "gen" && gen_k->count() > 0 && cfg.k != 3) ||
                                (cfg.subcommand == "adversary" && adv_k->count() > 0 && cfg.k != 3))) {
      throw CLI::ValidationError("--k", "family lb3 has k = 3");
    }
    if (cfg.family == "lbk" && cfg.subcommand == "adversary" && adv_k->count() == 0) cfg.k = 3;
    if (cfg.family == "lbk" && cfg.subcommand == "gen" && gen_k->count() == 0) cfg.k = 3;
    if (cfg.subcommand == "gen" && (cfg.family == "random-l1" || cfg.family == "path-l1") && cfg.n == 0) {
      throw CLI::RequiredError("--n");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cfg.subcommand == "gen") return cmd_gen(cfg, out);
    if (cfg.subcommand == "diam") return cmd_diam(cfg, out);
    if (cfg.subcommand == "solve") return cmd_solve(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    if (cfg.subcommand == "bench") return cmd_bench(cfg, out);
    return cmd_adversary(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

int run(int argc, const char* const* argv) {
  return run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}

}  // namespace augtree::cli
