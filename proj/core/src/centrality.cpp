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

#include "convexa/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "brandes.hpp"
#include "convexa/error.hpp"
#include "convexa/traversal.hpp"

namespace convexa {

std::string_view to_string(Measure m) {
  switch (m) {
    case Measure::kDegree:
      return "degree";
    case Measure::kPageRank:
      return "pagerank";
    case Measure::kBetweenness:
      return "betweenness";
    case Measure::kCloseness:
      return "closeness";
  }
  return "degree";
}

std::optional<Measure> parse_measure(std::string_view text) {
  for (Measure m : kAllMeasures) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

CentralityVector degree_centrality(const Graph& g) {
  CentralityVector out{Measure::kDegree, std::vector<double>(g.node_count()), {}};
  for (NodeId v = 0; v < g.node_count(); ++v) out.values[v] = static_cast<double>(g.degree(v));
  return out;
}

CentralityVector pagerank(const Graph& g, const PageRankOptions& options) {
  if (!(options.damping >= 0.0 && options.damping <= 1.0)) {
    throw InvalidInput("pagerank damping must lie in [0, 1]");
  }
  CentralityVector out{Measure::kPageRank,
                       {},
                       {{"damping", options.damping},
                        {"tolerance", options.tolerance},
                        {"max_iterations", static_cast<double>(options.max_iterations)}}};
  const std::size_t n = g.node_count();
  if (n == 0) return out;
  const double nd = static_cast<double>(n);
  const double d = options.damping;

  std::vector<double> rank(n, 1.0 / nd);
  std::vector<double> next(n);
  double residual = 0.0;
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) dangling += rank[v];
    }
    const double base = (1.0 - d) / nd + d * dangling / nd;
    for (NodeId v = 0; v < n; ++v) {
      double inflow = 0.0;
      for (const Incidence& inc : g.incident(v)) {
        inflow += rank[inc.node] / static_cast<double>(g.degree(inc.node));
      }
      next[v] = base + d * inflow;
    }
    residual = 0.0;
    for (NodeId v = 0; v < n; ++v) residual += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (residual < options.tolerance) {
      // Remove the rounding drift so the vector sums to one.
      const double total = std::accumulate(rank.begin(), rank.end(), 0.0);
      for (double& x : rank) x /= total;
      out.values = std::move(rank);
      out.params["iterations"] = static_cast<double>(iter + 1);
      return out;
    }
  }
  throw NumericalError("pagerank did not converge in " + std::to_string(options.max_iterations) +
                           " iterations (residual " + std::to_string(residual) + ")",
                       residual);
}

CentralityVector betweenness(const Graph& g) {
  CentralityVector out{Measure::kBetweenness, {}, {}};
  detail::brandes(g, &out.values, nullptr);
  return out;
}

CentralityVector closeness(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityVector out{Measure::kCloseness, std::vector<double>(n, 0.0), {}};
  if (n < 2) return out;
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    const DistanceRow row = bfs_distances(g, v);
    std::int64_t reached = 0;
    std::int64_t total = 0;
    for (std::int32_t dist : row.dist) {
      if (dist > 0) {
        ++reached;
        total += dist;
      }
    }
    const double r = static_cast<double>(reached);
    out.values[v] = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(total));
  }
  return out;
}

CentralityVector compute_centrality(const Graph& g, Measure m,
                                    const PageRankOptions& pagerank_options) {
  switch (m) {
    case Measure::kDegree:
      return degree_centrality(g);
    case Measure::kPageRank:
      return pagerank(g, pagerank_options);
    case Measure::kBetweenness:
      return betweenness(g);
    case Measure::kCloseness:
      return closeness(g);
  }
  return degree_centrality(g);
}

std::vector<RankedNode> top_k(const CentralityVector& v, std::size_t k) {
  if (k == 0) throw InvalidInput("top_k requires k >= 1");
  std::vector<NodeId> order(v.values.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  // Node ids follow identifier order, so a stable sort settles ties.
  std::stable_sort(order.begin(), order.end(),
                   [&v](NodeId a, NodeId b) { return v.values[a] > v.values[b]; });
  order.resize(std::min(k, order.size()));
  std::vector<RankedNode> out;
  out.reserve(order.size());
  for (NodeId node : order) out.push_back({node, v.values[node]});
  return out;
}

}  // namespace convexa
