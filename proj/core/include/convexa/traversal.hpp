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

#ifndef CONVEXA_TRAVERSAL_HPP_
#define CONVEXA_TRAVERSAL_HPP_

#include <cstdint>
#include <vector>

#include "convexa/graph.hpp"

namespace convexa {

inline constexpr std::int32_t kUnreachable = -1;

// Unweighted hop distances from one source.
struct DistanceRow {
  NodeId source = 0;
  std::vector<std::int32_t> dist;

  bool reachable(NodeId v) const { return dist[v] != kUnreachable; }
};

DistanceRow bfs_distances(const Graph& g, NodeId source);

// Components as sorted node lists, largest first; equal sizes are ordered by
// their smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// True for graphs with at most one node as well.
bool is_connected(const Graph& g);

// Biconnected blocks as edge subsets. Every edge is in exactly one block and
// bridges form singleton blocks. Blocks are ordered by their smallest edge.
std::vector<EdgeSubset> biconnected_components(const Graph& g);

// Throws InvalidInput for an out-of-range edge id.
bool is_bridge(const Graph& g, EdgeId e);

// bridge[e] is true iff e is a bridge of g.
std::vector<bool> bridge_mask(const Graph& g);

}  // namespace convexa

#endif  // CONVEXA_TRAVERSAL_HPP_
