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

#include "augtree/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "augtree/lowerbound.hpp"

namespace augtree {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

enum class IntStatus { kOk, kNotInteger, kOverflow };

IntStatus parse_int(std::string_view s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec == std::errc::result_out_of_range) return IntStatus::kOverflow;
  if (ec != std::errc() || ptr != last) return IntStatus::kNotInteger;
  return IntStatus::kOk;
}

std::map<std::string, std::string> key_values(const std::vector<std::string>& tokens, std::size_t from,
                                              ParseErrorKind kind, int line) {
  std::map<std::string, std::string> kv;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError(kind, line, "expected key=value, got '" + tokens[i] + "'");
    kv[tokens[i].substr(0, eq)] = tokens[i].substr(eq + 1);
  }
  return kv;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-empty line; false at end of input.
  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      tokens = split(line);
      if (!tokens.empty()) return true;
    }
    ++line_no_;
    return false;
  }
  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::int64_t require_int(const std::string& s, ParseErrorKind kind, int line) {
  std::int64_t v = 0;
  if (parse_int(s, v) != IntStatus::kOk) throw ParseError(kind, line, "expected integer, got '" + s + "'");
  return v;
}

}  // namespace

Instance read_instance(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tok;
  if (!reader.next(tok) || tok.size() != 2 || tok[0] != "DOAT" || tok[1] != "1") {
    throw ParseError(ParseErrorKind::kHeader, reader.line(), "expected 'DOAT 1'");
  }
  if (!reader.next(tok)) throw ParseError(ParseErrorKind::kHeader, reader.line(), "missing n/k/oracle line");
  const auto header = key_values(tok, 0, ParseErrorKind::kHeader, reader.line());
  if (!header.contains("n") || !header.contains("k") || !header.contains("oracle")) {
    throw ParseError(ParseErrorKind::kHeader, reader.line(), "header needs n=, k= and oracle=");
  }
  const std::int64_t n64 = require_int(header.at("n"), ParseErrorKind::kHeader, reader.line());
  const std::int64_t k64 = require_int(header.at("k"), ParseErrorKind::kHeader, reader.line());
  const std::string oracle_kind = header.at("oracle");
  if (n64 < 1 || n64 > (std::int64_t{1} << 30) || k64 < 1 || k64 > (std::int64_t{1} << 20)) {
    throw ParseError(ParseErrorKind::kHeader, reader.line(), "n or k out of range");
  }
  if (oracle_kind != "explicit" && oracle_kind != "l1" && oracle_kind != "lb3" && oracle_kind != "lbk") {
    throw ParseError(ParseErrorKind::kHeader, reader.line(), "unknown oracle kind '" + oracle_kind + "'");
  }
  const auto n = static_cast<Vertex>(n64);
  const int k = static_cast<int>(k64);

  std::vector<Edge> edges;
  Cost total = 0;
  bool have_block_line = reader.next(tok);
  while (have_block_line && tok[0] == "T") {
    const int line = reader.line();
    if (tok.size() != 4) throw ParseError(ParseErrorKind::kEdgeLine, line, "expected 'T u v cost'");
    const std::int64_t u = require_int(tok[1], ParseErrorKind::kEdgeLine, line);
    const std::int64_t v = require_int(tok[2], ParseErrorKind::kEdgeLine, line);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(ParseErrorKind::kEdgeLine, line, "vertex id out of range");
    std::int64_t c = 0;
    switch (parse_int(tok[3], c)) {
      case IntStatus::kNotInteger:
        throw ParseError(ParseErrorKind::kNonIntegerCost, line, "non-integer cost '" + tok[3] + "'");
      case IntStatus::kOverflow:
        throw ParseError(ParseErrorKind::kCostOverflow, line, "cost overflows 64 bits");
      case IntStatus::kOk:
        break;
    }
    if (c < 0) throw ParseError(ParseErrorKind::kEdgeLine, line, "negative cost");
    if (c >= kCostBudget - total) throw ParseError(ParseErrorKind::kCostOverflow, line, "tree cost total reaches 2^62");
    total += c;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), c});
    have_block_line = reader.next(tok);
  }
  if (edges.size() != static_cast<std::size_t>(n - 1)) {
    throw ParseError(ParseErrorKind::kEdgeCount, reader.line(),
                     "edge count: expected " + std::to_string(n - 1) + " tree edges, found " + std::to_string(edges.size()));
  }

  Tree tree;
  try {
    tree = Tree(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::kInconsistent, reader.line(), e.what());
  }

  auto oracle_error = [&](const std::string& what) {
    return ParseError(ParseErrorKind::kOracleBlock, reader.line(), what);
  };
  std::optional<CostOracle> oracle;
  if (oracle_kind == "explicit") {
    std::vector<Cost> matrix;
    matrix.reserve(static_cast<std::size_t>(n) * n);
    for (Vertex row = 0; row < n; ++row) {
      if (row > 0 && !reader.next(tok)) throw oracle_error("missing matrix row");
      if (row == 0 && !have_block_line) throw oracle_error("missing matrix row");
      if (tok.size() != static_cast<std::size_t>(n)) throw oracle_error("matrix row needs n entries");
      for (const auto& t : tok) {
        std::int64_t c = 0;
        if (parse_int(t, c) != IntStatus::kOk) throw oracle_error("bad matrix entry '" + t + "'");
        matrix.push_back(c);
      }
    }
    try {
      oracle = CostOracle::explicit_matrix(n, std::move(matrix));
    } catch (const std::invalid_argument& e) {
      throw oracle_error(e.what());
    }
  } else if (oracle_kind == "l1") {
    std::vector<Point> points;
    for (Vertex row = 0; row < n; ++row) {
      if (row > 0 && !reader.next(tok)) throw oracle_error("missing point row");
      if (row == 0 && !have_block_line) throw oracle_error("missing point row");
      if (tok.size() != 2) throw oracle_error("point row needs 'x y'");
      std::int64_t x = 0, y = 0;
      if (parse_int(tok[0], x) != IntStatus::kOk || parse_int(tok[1], y) != IntStatus::kOk ||
          std::abs(x) > (std::int64_t{1} << 59) || std::abs(y) > (std::int64_t{1} << 59)) {
        throw oracle_error("bad point coordinates");
      }
      points.push_back({x, y});
    }
    oracle = CostOracle::l1_points(std::move(points));
  } else {
    if (!have_block_line || tok[0] != "params") throw oracle_error("expected 'params ...'");
    const auto kv = key_values(tok, 1, ParseErrorKind::kOracleBlock, reader.line());
    LowerBoundParams params;
    params.k = oracle_kind == "lb3" ? 3 : k;
    if (oracle_kind == "lb3" && k != 3) throw oracle_error("lb3 requires k=3");
    for (const auto& [key, value] : kv) {
      if (key == "n_star") {
        params.n_star = static_cast<int>(require_int(value, ParseErrorKind::kOracleBlock, reader.line()));
      } else if (key == "a") {
        params.a = static_cast<Vertex>(require_int(value, ParseErrorKind::kOracleBlock, reader.line()));
      } else if (key == "b") {
        params.b = static_cast<Vertex>(require_int(value, ParseErrorKind::kOracleBlock, reader.line()));
      } else if (key == "variant") {
        if (value == "I") {
          params.variant = LbVariant::kI;
        } else if (value == "Iab") {
          params.variant = LbVariant::kIab;
        } else {
          throw oracle_error("variant must be I or Iab");
        }
      } else {
        throw oracle_error("unknown params key '" + key + "'");
      }
    }
    if (!kv.contains("n_star")) throw oracle_error("params needs n_star=");
    try {
      Instance generated = gen_lb(params);
      if (generated.tree.size() != n) throw std::invalid_argument("n does not match the construction");
      std::vector<std::uint64_t> want, got;
      for (const Edge& e : generated.tree.edges()) want.push_back(pair_key(e.u, e.v));
      for (const Edge& e : tree.edges()) got.push_back(pair_key(e.u, e.v));
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got) throw std::invalid_argument("tree does not match the lower-bound construction");
      oracle = std::move(generated.oracle);
    } catch (const std::invalid_argument& e) {
      throw ParseError(ParseErrorKind::kInconsistent, reader.line(), e.what());
    }
  }

  Instance inst{std::move(tree), std::move(*oracle), k};
  try {
    validate_instance(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseErrorKind::kInconsistent, reader.line(), e.what());
  }
  if (reader.next(tok)) throw ParseError(ParseErrorKind::kOracleBlock, reader.line(), "trailing content");
  return inst;
}

void write_instance(const Instance& inst, std::ostream& out) {
  const Vertex n = inst.tree.size();
  std::string kind;
  switch (inst.oracle.kind()) {
    case OracleKind::kExplicit:
      kind = "explicit";
      break;
    case OracleKind::kL1:
      kind = "l1";
      break;
    case OracleKind::kLowerBound:
      kind = inst.oracle.lb_layout().params().k == 3 ? "lb3" : "lbk";
      break;
  }
  out << "DOAT 1\n";
  out << "n=" << n << " k=" << inst.k << " oracle=" << kind << "\n";
  for (const Edge& e : inst.tree.edges()) out << "T " << e.u << ' ' << e.v << ' ' << e.cost << "\n";
  switch (inst.oracle.kind()) {
    case OracleKind::kExplicit:
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) out << (v ? " " : "") << inst.oracle.peek(u, v);
        out << "\n";
      }
      break;
    case OracleKind::kL1:
      for (const Point& p : inst.oracle.points()) out << p.x << ' ' << p.y << "\n";
      break;
    case OracleKind::kLowerBound: {
      const auto& p = inst.oracle.lb_layout().params();
      out << "params n_star=" << p.n_star << " a=" << p.a << " b=" << p.b
          << " variant=" << (p.variant == LbVariant::kI ? "I" : "Iab") << "\n";
      break;
    }
  }
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_instance(in);
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_instance(inst, out);
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace augtree
