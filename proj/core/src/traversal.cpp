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

#include "convexa/traversal.hpp"

#include <algorithm>
#include <deque>

#include "blocks.hpp"
#include "convexa/error.hpp"

namespace convexa {

DistanceRow bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.node_count()) {
    throw InvalidInput("unknown source node " + std::to_string(source));
  }
  DistanceRow row;
  row.source = source;
  row.dist.assign(g.node_count(), kUnreachable);
  std::vector<NodeId> queue;
  queue.reserve(g.node_count());
  row.dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId v = queue[head];
    for (const Incidence& inc : g.incident(v)) {
      if (row.dist[inc.node] == kUnreachable) {
        row.dist[inc.node] = row.dist[v] + 1;
        queue.push_back(inc.node);
      }
    }
  }
  return row;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> components;
  for (NodeId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> members{start};
    seen[start] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (const Incidence& inc : g.incident(members[head])) {
        if (!seen[inc.node]) {
          seen[inc.node] = true;
          members.push_back(inc.node);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  // Discovery order already sorts equal sizes by smallest member.
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return components;
}

bool is_connected(const Graph& g) {
  if (g.node_count() <= 1) return true;
  const DistanceRow row = bfs_distances(g, 0);
  return std::none_of(row.dist.begin(), row.dist.end(),
                      [](std::int32_t d) { return d == kUnreachable; });
}

std::vector<EdgeSubset> biconnected_components(const Graph& g) {
  return detail::decompose_blocks(g.node_count(),
                                  [&g](NodeId v) { return g.incident(v); });
}

std::vector<bool> bridge_mask(const Graph& g) {
  std::vector<bool> bridge(g.edge_count(), false);
  for (const EdgeSubset& block : biconnected_components(g)) {
    if (block.size() == 1) bridge[block.front()] = true;
  }
  return bridge;
}

bool is_bridge(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) {
    throw InvalidInput("unknown edge id " + std::to_string(e));
  }
  return bridge_mask(g)[e];
}

}  // namespace convexa
