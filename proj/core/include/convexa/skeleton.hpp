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

#ifndef CONVEXA_SKELETON_HPP_
#define CONVEXA_SKELETON_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "convexa/graph.hpp"
#include "convexa/random.hpp"

namespace convexa {

enum class ClusteringObjective {
  // 3 * triangles / connected triples.
  kGlobalTransitivity,
  // Mean local clustering over all nodes, degree < 2 counting as 0.
  kAverageLocal,
};

std::string_view to_string(ClusteringObjective objective);
std::optional<ClusteringObjective> parse_objective(std::string_view text);

struct RemovalStep {
  EdgeId edge;
  // Objective of the remaining graph right after this removal.
  double objective;
};

struct SkeletonResult {
  EdgeSubset kept;
  std::vector<RemovalStep> removed;
  ClusteringObjective objective = ClusteringObjective::kGlobalTransitivity;
  // Shape of the source graph, used to reject mismatched pairs.
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
};

struct SkeletonOptions {
  ClusteringObjective objective = ClusteringObjective::kGlobalTransitivity;
  TieRule tie_break;
};

// Greedy convex skeleton of a connected graph. While some biconnected block
// is not a clique, removes the non-bridge edge whose removal leaves the
// highest clustering objective. The result is a connected spanning tree of
// cliques.
SkeletonResult extract_convex_skeleton(const Graph& g, const SkeletonOptions& options = {});

// The skeleton as a graph over g's node universe.
Graph skeleton_graph(const Graph& g, const SkeletonResult& sk);

// All nodes of g and exactly the edges the skeleton dropped.
Graph remainder(const Graph& g, const SkeletonResult& sk);

struct RetainedFraction {
  double edges = 0.0;
  double weight = 0.0;
};

RetainedFraction retained_weight_fraction(const Graph& g, const SkeletonResult& sk);

// Objective value of a whole graph, matching the values in the removal log.
double clustering_objective(const Graph& g, ClusteringObjective objective);

}  // namespace convexa

#endif  // CONVEXA_SKELETON_HPP_
