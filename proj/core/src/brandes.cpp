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

#include "brandes.hpp"

#include <cstdint>

namespace convexa::detail {

void brandes(const Graph& g, std::vector<double>* node_scores,
             std::vector<double>* edge_scores) {
  const std::size_t n = g.node_count();
  if (node_scores) node_scores->assign(n, 0.0);
  if (edge_scores) edge_scores->assign(g.edge_count(), 0.0);

  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      for (const Incidence& inc : g.incident(v)) {
        const NodeId w = inc.node;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    // Predecessors of w are its neighbors one hop closer to s.
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId w = order[i];
      for (const Incidence& inc : g.incident(w)) {
        const NodeId v = inc.node;
        if (dist[v] != dist[w] - 1) continue;
        const double share = sigma[v] / sigma[w] * (1.0 + delta[w]);
        delta[v] += share;
        if (edge_scores) (*edge_scores)[inc.edge] += share;
      }
      if (node_scores) (*node_scores)[w] += delta[w];
    }
  }
  // Every unordered pair was counted from both ends.
  if (node_scores) {
    for (double& x : *node_scores) x /= 2.0;
  }
  if (edge_scores) {
    for (double& x : *edge_scores) x /= 2.0;
  }
}

}  // namespace convexa::detail
