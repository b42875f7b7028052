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

namespace augtree::cli {

/// Parsed command line. Every field is validated before any work starts.
struct RunConfig {
  std::string subcommand;
  std::string family;  // gen, bench, adversary
  std::string algo;    // solve, bench, adversary
  std::string input;
  std::string output;  // empty: stdout where allowed
  std::string shortcuts;
  std::string variant = "I";
  std::int64_t n = 0;
  int n_star = 3;
  int k = 1;
  int h = 0;  // gonzalez; 0 means k + 1
  int reps = 1;
  int samples = 5;
  std::vector<std::int64_t> sizes;
  double eps = 0.5;
  double budget = 1e10;
  std::uint64_t seed = 0;
  int threads = 1;
  bool full = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `augtree` invocation. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace augtree::cli
