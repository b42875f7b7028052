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

#include <filesystem>
#include <iosfwd>

#include "augtree/instance.hpp"

namespace augtree {

// DOAT text format:
//
//   DOAT 1
//   n=<n> k=<k> oracle=<explicit|l1|lb3|lbk>
//   T u v cost                      (n-1 lines)
//   <oracle block>
//
// explicit: n rows of n integers; l1: n rows "x y"; lb3/lbk: a single line
// "params n_star=<s> [a=<id> b=<id>] [variant=I|Iab]".

enum class ParseErrorKind {
  kHeader,          // missing/garbled "DOAT 1" or n/k/oracle line
  kEdgeCount,       // number of T lines differs from n-1
  kEdgeLine,        // malformed T line or vertex id
  kNonIntegerCost,  // cost token is not an integer
  kCostOverflow,    // cost does not fit, or tree total reaches 2^62
  kOracleBlock,     // malformed oracle payload
  kInconsistent,    // well-formed but not a valid instance
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}
  ParseErrorKind kind() const { return kind_; }
  int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

Instance read_instance(std::istream& in);
void write_instance(const Instance& inst, std::ostream& out);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

}  // namespace augtree
