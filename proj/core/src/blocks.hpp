// Copyright 2026 The Convexa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONVEXA_SRC_BLOCKS_HPP_
#define CONVEXA_SRC_BLOCKS_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "convexa/graph.hpp"

namespace convexa::detail {

// Hopcroft-Tarjan block decomposition with an explicit stack. `incident(v)`
// must return a range of Incidence; edge ids must be below `edge_bound`.
// Works on any adjacency view so the skeleton search can run it on its
// shrinking edge set.
template <typename IncidentFn>
std::vector<EdgeSubset> decompose_blocks(std::size_t n, IncidentFn&& incident) {
  constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);
  struct Frame {
    NodeId v;
    EdgeId parent_edge;
    std::size_t next;
  };

  std::vector<std::int64_t> disc(n, -1);
  std::vector<std::int64_t> low(n, 0);
  std::vector<Frame> frames;
  std::vector<EdgeId> edge_stack;
  std::vector<EdgeSubset> blocks;
  std::int64_t timer = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    frames.push_back({root, kNoEdge, 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& inc = incident(f.v);
      if (f.next < inc.size()) {
        const Incidence step = inc[f.next++];
        if (step.edge == f.parent_edge) continue;
        const NodeId w = step.node;
        if (disc[w] == -1) {
          edge_stack.push_back(step.edge);
          disc[w] = low[w] = timer++;
          frames.push_back({w, step.edge, 0});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back(step.edge);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      const NodeId parent = frames.back().v;
      low[parent] = std::min(low[parent], low[done.v]);
      if (low[done.v] >= disc[parent]) {
        EdgeSubset block;
        EdgeId e;
        do {
          e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
        } while (e != done.parent_edge);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const EdgeSubset& a, const EdgeSubset& b) { return a.front() < b.front(); });
  return blocks;
}

}  // namespace convexa::detail

#endif  // CONVEXA_SRC_BLOCKS_HPP_
