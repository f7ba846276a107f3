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

#include "convexa/netstats.hpp"

#include <algorithm>
#include <cmath>

#include "convexa/convexity.hpp"
#include "convexa/traversal.hpp"

namespace convexa {

double clustering_global(const Graph& g) {
  return clustering_objective(g, ClusteringObjective::kGlobalTransitivity);
}

double clustering_avg_local(const Graph& g) {
  return clustering_objective(g, ClusteringObjective::kAverageLocal);
}

std::optional<double> assortativity(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("assortativity of an edgeless graph");
  // Both orientations give x and y the same marginal, so one mean serves.
  double mean = 0.0;
  for (const Edge& e : g.edges()) {
    mean += static_cast<double>(g.degree(e.u) + g.degree(e.v));
  }
  mean /= 2.0 * static_cast<double>(g.edge_count());
  double cov = 0.0;
  double var = 0.0;
  for (const Edge& e : g.edges()) {
    const double a = static_cast<double>(g.degree(e.u)) - mean;
    const double b = static_cast<double>(g.degree(e.v)) - mean;
    cov += 2.0 * a * b;
    var += a * a + b * b;
  }
  if (var == 0.0) return std::nullopt;
  return std::clamp(cov / var, -1.0, 1.0);
}

StatsRecord descriptive_stats(const Graph& g, const StatsOptions& options) {
  StatsRecord s;
  s.nodes = g.node_count();
  s.edges = g.edge_count();
  if (s.nodes == 0) return s;
  s.mean_degree = 2.0 * static_cast<double>(s.edges) / static_cast<double>(s.nodes);
  s.clustering = clustering_objective(g, options.clustering);
  if (s.edges > 0) s.assortativity = assortativity(g);

  const auto components = connected_components(g);
  const std::vector<NodeId>& lcc = components.front();
  s.pct_lcc = 100.0 * static_cast<double>(lcc.size()) / static_cast<double>(s.nodes);
  if (lcc.size() < 2) return s;

  const Graph core = lcc.size() == s.nodes ? g : g.induced_subgraph(lcc);
  std::uint64_t total = 0;
  for (NodeId v = 0; v < core.node_count(); ++v) {
    const DistanceRow row = bfs_distances(core, v);
    for (NodeId u = v + 1; u < core.node_count(); ++u) total += static_cast<std::uint64_t>(row.dist[u]);
  }
  const double pairs = static_cast<double>(core.node_count()) *
                       static_cast<double>(core.node_count() - 1) / 2.0;
  s.mean_distance = static_cast<double>(total) / pairs;

  ConvexityOptions copt;
  copt.runs = options.convexity_runs;
  copt.seed = options.seed;
  copt.threads = options.threads;
  s.convexity = convexity(core, copt).x;
  return s;
}

}  // namespace convexa
