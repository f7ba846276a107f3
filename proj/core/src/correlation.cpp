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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "convexa/netstats.hpp"

namespace convexa {
namespace {

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidInput("correlation inputs differ in length (" + std::to_string(x.size()) +
                       " vs " + std::to_string(y.size()) + ")");
  }
  if (x.size() < 2) throw InvalidInput("correlation needs at least two observations");
}

double pearson(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = x[i] - mx;
    const double b = y[i] - my;
    sxy += a * b;
    sxx += a * a;
    syy += b * b;
  }
  if (sxx == 0.0 || syy == 0.0) throw ZeroVarianceError("rank variance is zero");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::pair<std::vector<double>, std::vector<double>> align(const std::map<std::string, double>& x,
                                                          const std::map<std::string, double>& y) {
  if (x.size() != y.size()) throw InvalidInput("correlation key sets differ");
  std::vector<double> a;
  std::vector<double> b;
  a.reserve(x.size());
  b.reserve(y.size());
  auto it = y.begin();
  for (const auto& [key, value] : x) {
    if (it->first != key) throw InvalidInput("correlation key sets differ at '" + key + "'");
    a.push_back(value);
    b.push_back(it->second);
    ++it;
  }
  return {std::move(a), std::move(b)};
}

int sign(double d) { return (d > 0.0) - (d < 0.0); }

}  // namespace

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank (i + j) / 2 + 1.
    const double rank = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

double kendall_tau(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  std::int64_t only_x_tied = 0;
  std::int64_t only_y_tied = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const int dx = sign(x[i] - x[j]);
      const int dy = sign(y[i] - y[j]);
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) {
        ++only_x_tied;
      } else if (dy == 0) {
        ++only_y_tied;
      } else if (dx == dy) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double untied_x = static_cast<double>(concordant + discordant + only_y_tied);
  const double untied_y = static_cast<double>(concordant + discordant + only_x_tied);
  if (untied_x == 0.0 || untied_y == 0.0) throw ZeroVarianceError("rank variance is zero");
  const double tau = static_cast<double>(concordant - discordant) / std::sqrt(untied_x * untied_y);
  return std::clamp(tau, -1.0, 1.0);
}

double spearman_rho(const std::map<std::string, double>& x, const std::map<std::string, double>& y) {
  const auto [a, b] = align(x, y);
  return spearman_rho(a, b);
}

double kendall_tau(const std::map<std::string, double>& x, const std::map<std::string, double>& y) {
  const auto [a, b] = align(x, y);
  return kendall_tau(a, b);
}

CorrelationMatrix correlation_matrix(std::span<const CentralityVector> network,
                                     std::span<const CentralityVector> backbone) {
  if (network.size() != kAllMeasures.size() || backbone.size() != kAllMeasures.size()) {
    throw InvalidInput("correlation matrix needs all four centrality measures on both sides");
  }
  CorrelationMatrix cells{};
  for (std::size_t i = 0; i < kAllMeasures.size(); ++i) {
    for (std::size_t j = 0; j < kAllMeasures.size(); ++j) {
      CorrelationCell& cell = cells[i][j];
      cell.row = network[i].measure;
      cell.col = backbone[j].measure;
      try {
        cell.rho = spearman_rho(network[i].values, backbone[j].values);
        cell.tau = kendall_tau(network[i].values, backbone[j].values);
      } catch (const ZeroVarianceError&) {
        cell.rho.reset();
        cell.tau.reset();
      }
    }
  }
  return cells;
}

CorrelationMatrix correlation_matrix(const Graph& g, const Graph& backbone_graph,
                                     const PageRankOptions& pagerank_options) {
  if (!g.same_universe(backbone_graph)) {
    throw InvalidInput("backbone node universe differs from the network's");
  }
  std::vector<CentralityVector> rows;
  std::vector<CentralityVector> cols;
  for (Measure m : kAllMeasures) {
    rows.push_back(compute_centrality(g, m, pagerank_options));
    cols.push_back(compute_centrality(backbone_graph, m, pagerank_options));
  }
  return correlation_matrix(rows, cols);
}

CorrelationMatrix correlation_matrix(const Graph& g, const Backbone& b,
                                     const PageRankOptions& pagerank_options) {
  return correlation_matrix(g, g.edge_subgraph(b.edges), pagerank_options);
}

}  // namespace convexa
