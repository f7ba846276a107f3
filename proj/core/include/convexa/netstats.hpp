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

#ifndef CONVEXA_NETSTATS_HPP_
#define CONVEXA_NETSTATS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "convexa/backbones.hpp"
#include "convexa/centrality.hpp"
#include "convexa/error.hpp"
#include "convexa/graph.hpp"
#include "convexa/random.hpp"
#include "convexa/skeleton.hpp"

namespace convexa {

// Summary statistics of one network or backbone. Optional fields are
// undefined for the graph at hand (no edges, a single-node LCC, or constant
// degrees for assortativity).
struct StatsRecord {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double pct_lcc = 0.0;
  double mean_degree = 0.0;
  // Mean hop distance over unordered pairs of the largest component.
  std::optional<double> mean_distance;
  std::optional<double> assortativity;
  double clustering = 0.0;
  // Convexity of the largest component.
  std::optional<double> convexity;
};

struct StatsOptions {
  std::size_t convexity_runs = 100;
  std::uint64_t seed = kDefaultSeed;
  ClusteringObjective clustering = ClusteringObjective::kAverageLocal;
  unsigned threads = 0;
};

StatsRecord descriptive_stats(const Graph& g, const StatsOptions& options = {});

// Degree assortativity: Pearson correlation of endpoint degrees over both
// orientations of every edge. nullopt when the degree variance is zero.
// Throws PreconditionError on an edgeless graph.
std::optional<double> assortativity(const Graph& g);

// 3 * triangles / connected triples, 0 without triples.
double clustering_global(const Graph& g);
// Mean local clustering over all nodes; nodes of degree < 2 contribute 0.
double clustering_avg_local(const Graph& g);

// Raised when a rank correlation is undefined because one side is constant.
class ZeroVarianceError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Ranks starting at 1; tied values share the mean of their ranks.
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation of average ranks.
double spearman_rho(std::span<const double> x, std::span<const double> y);
// Kendall tau-b over all pairs.
double kendall_tau(std::span<const double> x, std::span<const double> y);

// Keyed variants; the key sets must match exactly.
double spearman_rho(const std::map<std::string, double>& x, const std::map<std::string, double>& y);
double kendall_tau(const std::map<std::string, double>& x, const std::map<std::string, double>& y);

struct CorrelationCell {
  Measure row;
  Measure col;
  // nullopt when one of the vectors is constant.
  std::optional<double> rho;
  std::optional<double> tau;
};

// cells[i][j] correlates measure kAllMeasures[i] on the network with
// measure kAllMeasures[j] on the backbone, over all nodes.
using CorrelationMatrix = std::array<std::array<CorrelationCell, 4>, 4>;

CorrelationMatrix correlation_matrix(std::span<const CentralityVector> network,
                                     std::span<const CentralityVector> backbone);
CorrelationMatrix correlation_matrix(const Graph& g, const Graph& backbone_graph,
                                     const PageRankOptions& pagerank_options = {});
CorrelationMatrix correlation_matrix(const Graph& g, const Backbone& b,
                                     const PageRankOptions& pagerank_options = {});

}  // namespace convexa

#endif  // CONVEXA_NETSTATS_HPP_
