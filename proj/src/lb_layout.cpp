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

#include "augtree/lb_layout.hpp"

#include <array>

namespace augtree {

namespace {

// Distances in G between vertex classes. Leaf-class diagonal entries are for
// two distinct leaves of the same star. Rows/columns follow LbLayout::Class.
constexpr std::array<std::array<Cost, 14>, 14> kClassCost = {{
    //  X1 X2 X3 X4 V1 U2 V2 U3 V3 U4 L1 L2 L3 L4
    {0, 4, 5, 5, 2, 4, 6, 7, 7, 7, 2, 2, 3, 7},  // X1
    {4, 0, 5, 5, 4, 2, 2, 4, 7, 7, 6, 2, 3, 7},  // X2
    {5, 5, 0, 4, 7, 7, 4, 2, 2, 4, 7, 3, 2, 6},  // X3
    {5, 5, 4, 0, 7, 7, 7, 6, 4, 2, 7, 3, 2, 2},  // X4
    {2, 4, 7, 7, 0, 2, 6, 8, 9, 9, 4, 4, 5, 9},  // V1
    {4, 2, 7, 7, 2, 0, 4, 6, 9, 9, 6, 4, 5, 9},  // U2
    {6, 2, 4, 7, 6, 4, 0, 2, 6, 8, 8, 4, 5, 9},  // V2
    {7, 4, 2, 6, 8, 6, 2, 0, 4, 6, 9, 5, 4, 8},  // U3
    {7, 7, 2, 4, 9, 9, 6, 4, 0, 2, 9, 5, 4, 6},  // V3
    {7, 7, 4, 2, 9, 9, 8, 6, 2, 0, 9, 5, 4, 4},  // U4
    {2, 6, 7, 7, 4, 6, 8, 9, 9, 9, 4, 4, 5, 9},  // L1
    {2, 2, 3, 3, 4, 4, 4, 5, 5, 5, 4, 3, 2, 5},  // L2
    {3, 3, 2, 2, 5, 5, 5, 4, 4, 4, 5, 2, 3, 4},  // L3
    {7, 7, 6, 2, 9, 9, 9, 8, 6, 4, 9, 5, 4, 4},  // L4
}};

}  // namespace

LbLayout::LbLayout(LowerBoundParams params) : params_(params) {
  if (params_.n_star < 2) throw std::invalid_argument("n_star must be >= 2");
  if (params_.k < 3) throw std::invalid_argument("lower-bound family needs k >= 3");
  if (params_.k > 3 && params_.n_star < params_.k - 1) {
    throw std::invalid_argument("generalized family needs n_star >= k-1");
  }
  if (params_.a == kNoVertex) params_.a = leaf(2, 1);
  if (params_.b == kNoVertex) params_.b = leaf(3, 1);
  if (params_.a < 0 || params_.a >= vertex_count() || class_of(params_.a) != Class::kL2) {
    throw std::invalid_argument("a must be a leaf of star 2");
  }
  if (params_.b < 0 || params_.b >= vertex_count() || class_of(params_.b) != Class::kL3) {
    throw std::invalid_argument("b must be a leaf of star 3");
  }
}

std::vector<Vertex> LbLayout::z_set() const {
  std::vector<Vertex> z;
  for (int j = 1; j <= params_.k - 3; ++j) z.push_back(leaf(1, j));
  return z;
}

std::vector<Vertex> LbLayout::leaves(int i) const {
  std::vector<Vertex> out;
  for (int j = 1; j < params_.n_star; ++j) out.push_back(leaf(i, j));
  return out;
}

LbLayout::Class LbLayout::class_of(Vertex v) const {
  const Vertex stars = 4 * params_.n_star;
  if (v < stars) {
    const int star = v / params_.n_star;
    const bool is_center = v % params_.n_star == 0;
    return static_cast<Class>(is_center ? star : static_cast<int>(Class::kL1) + star);
  }
  return static_cast<Class>(static_cast<int>(Class::kV1) + (v - stars));
}

Cost LbLayout::cost(Vertex u, Vertex v) const {
  if (u == v) return 0;
  if (params_.variant == LbVariant::kIab &&
      ((u == params_.a && v == params_.b) || (u == params_.b && v == params_.a))) {
    return 1;
  }
  return kClassCost[static_cast<int>(class_of(u))][static_cast<int>(class_of(v))];
}

}  // namespace augtree
