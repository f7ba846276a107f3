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

#ifndef CONVEXA_CENTRALITY_HPP_
#define CONVEXA_CENTRALITY_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convexa/graph.hpp"

namespace convexa {

enum class Measure { kDegree, kPageRank, kBetweenness, kCloseness };

inline constexpr std::array<Measure, 4> kAllMeasures = {
    Measure::kDegree, Measure::kPageRank, Measure::kBetweenness, Measure::kCloseness};

std::string_view to_string(Measure m);
std::optional<Measure> parse_measure(std::string_view text);

// One value per node, indexed by NodeId.
struct CentralityVector {
  Measure measure = Measure::kDegree;
  std::vector<double> values;
  std::map<std::string, double> params;
};

CentralityVector degree_centrality(const Graph& g);

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

// Power iteration on the graph with every edge replaced by two opposing arcs.
// Teleport is uniform and isolated nodes spread their mass uniformly.
// Converges when the L1 change drops below the tolerance; otherwise throws
// NumericalError with the last residual.
CentralityVector pagerank(const Graph& g, const PageRankOptions& options = {});

// Unnormalized shortest-path betweenness over unordered pairs.
CentralityVector betweenness(const Graph& g);

// Closeness corrected for the reachable set:
//   ((r - 1) / (n - 1)) * ((r - 1) / sum of distances to reachable nodes),
// where r counts the nodes reachable from v including v. Isolated nodes
// score 0. On connected graphs this is (n - 1) / sum of distances.
CentralityVector closeness(const Graph& g);

CentralityVector compute_centrality(const Graph& g, Measure m,
                                    const PageRankOptions& pagerank_options = {});

struct RankedNode {
  NodeId node;
  double value;
};

// The k highest values; ties go to the smaller identifier. Returns every
// node when k exceeds the node count. Throws InvalidInput for k == 0.
std::vector<RankedNode> top_k(const CentralityVector& v, std::size_t k);

}  // namespace convexa

#endif  // CONVEXA_CENTRALITY_HPP_
