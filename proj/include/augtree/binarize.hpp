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

#include <vector>

#include "augtree/tree.hpp"

namespace augtree {

struct Binarized {
  Tree tree;                  // rooted at the input's root_or_default()
  std::vector<Vertex> to_new;  // original id -> id in `tree`
  std::vector<Vertex> owner;   // id in `tree` -> original vertex whose gadget holds it
  Vertex added = 0;
};

/// Replaces every vertex with h >= 3 children by a balanced full binary
/// gadget with h leaves rooted at the vertex. Gadget edges cost 0; the edge
/// from gadget leaf i to child i keeps the original cost. Adds 2h-2 vertices
/// per such vertex and preserves all distances between original vertices.
Binarized binarize(const Tree& tree);

/// binarize() followed by renumbering every vertex in depth-first preorder,
/// so that tree neighbors tend to share cache lines. to_new is no longer the
/// identity.
Binarized binarize_preorder(const Tree& tree);

}  // namespace augtree
