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

#include "support/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace convexa::testing {
namespace {

bool adjacent(const Graph& g, NodeId a, NodeId b) {
  for (const Incidence& inc : g.incident(a)) {
    if (inc.node == b) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

std::vector<std::vector<NodeId>> all_shortest_paths(const Graph& g,
                                                    const std::vector<std::vector<int>>& dist,
                                                    NodeId a, NodeId b) {
  std::vector<std::vector<NodeId>> out;
  if (dist[a][b] >= kFar) return out;
  const int length = dist[a][b];
  std::vector<NodeId> path{a};
  // Depth-first over all walks of the right length that never revisit a
  // node, keeping those that end at b.
  std::function<void()> extend = [&]() {
    const NodeId last = path.back();
    if (static_cast<int>(path.size()) - 1 == length) {
      if (last == b) out.push_back(path);
      return;
    }
    for (NodeId next = 0; next < g.node_count(); ++next) {
      if (!adjacent(g, last, next)) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      extend();
      path.pop_back();
    }
  };
  extend();
  return out;
}

std::vector<NodeId> oracle_hull(const Graph& g, std::vector<NodeId> seeds) {
  const auto dist = floyd_distances(g);
  std::set<NodeId> set(seeds.begin(), seeds.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<NodeId> members(set.begin(), set.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        for (const auto& path : all_shortest_paths(g, dist, members[i], members[j])) {
          for (NodeId v : path) grew |= set.insert(v).second;
        }
      }
    }
  }
  return {set.begin(), set.end()};
}

bool oracle_is_convex(const Graph& g, const std::vector<NodeId>& nodes) {
  const auto dist = floyd_distances(g);
  const std::set<NodeId> set(nodes.begin(), nodes.end());
  for (NodeId a : set) {
    for (NodeId b : set) {
      if (a >= b) continue;
      for (const auto& path : all_shortest_paths(g, dist, a, b)) {
        for (NodeId v : path) {
          if (!set.count(v)) return false;
        }
      }
    }
  }
  return true;
}

std::vector<double> oracle_node_betweenness(const Graph& g) {
  const auto dist = floyd_distances(g);
  std::vector<double> score(g.node_count(), 0.0);
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = a + 1; b < g.node_count(); ++b) {
      const auto paths = all_shortest_paths(g, dist, a, b);
      for (const auto& path : paths) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
          score[path[i]] += 1.0 / static_cast<double>(paths.size());
        }
      }
    }
  }
  return score;
}

std::vector<double> oracle_edge_betweenness(const Graph& g) {
  const auto dist = floyd_distances(g);
  std::vector<double> score(g.edge_count(), 0.0);
  for (NodeId a = 0; a < g.node_count(); ++a) {
    for (NodeId b = a + 1; b < g.node_count(); ++b) {
      const auto paths = all_shortest_paths(g, dist, a, b);
      for (const auto& path : paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if ((ed.u == path[i] && ed.v == path[i + 1]) || (ed.v == path[i] && ed.u == path[i + 1])) {
              score[e] += 1.0 / static_cast<double>(paths.size());
            }
          }
        }
      }
    }
  }
  return score;
}

double oracle_max_spanning_weight(const Graph& g) {
  const std::size_t n = g.node_count();
  const std::size_t m = g.edge_count();
  double best = -1.0;
  // Every (n-1)-edge subset without a cycle is a spanning tree.
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
  do {
    std::vector<NodeId> parent(n);
    for (NodeId i = 0; i < n; ++i) parent[i] = i;
    std::function<NodeId(NodeId)> root = [&](NodeId x) { return parent[x] == x ? x : root(parent[x]); };
    bool acyclic = true;
    double w = 0.0;
    for (EdgeId e = 0; e < m && acyclic; ++e) {
      if (!pick[e]) continue;
      const NodeId a = root(g.edge(e).u);
      const NodeId b = root(g.edge(e).v);
      if (a == b) acyclic = false;
      parent[a] = b;
      w += g.weight(e);
    }
    if (acyclic) best = std::max(best, w);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

std::size_t oracle_component_count(const Graph& g, NodeId removed) {
  const std::size_t n = g.node_count();
  std::vector<int> comp(n, -1);
  std::size_t count = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (s == removed || comp[s] != -1) continue;
    std::vector<NodeId> stack{s};
    comp[s] = static_cast<int>(count);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (inc.node != removed && comp[inc.node] == -1) {
          comp[inc.node] = static_cast<int>(count);
          stack.push_back(inc.node);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<NodeId> oracle_cut_vertices(const Graph& g) {
  const NodeId none = static_cast<NodeId>(g.node_count());
  const std::size_t base = oracle_component_count(g, none);
  std::vector<NodeId> cuts;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    // Removing v also removes its own component when v was isolated.
    const std::size_t without = oracle_component_count(g, v) + (g.degree(v) == 0 ? 1 : 0);
    if (without > base) cuts.push_back(v);
  }
  return cuts;
}

std::vector<double> oracle_pagerank(const Graph& g, double damping) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd google = Eigen::MatrixXd::Constant(n, n, (1.0 - damping) / static_cast<double>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    const auto deg = g.degree(static_cast<NodeId>(j));
    if (deg == 0) {
      google.col(j).array() += damping / static_cast<double>(n);
      continue;
    }
    for (const Incidence& inc : g.incident(static_cast<NodeId>(j))) {
      google(inc.node, j) += damping / static_cast<double>(deg);
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(google);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (solver.eigenvalues()[i].real() > solver.eigenvalues()[best].real()) best = i;
  }
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  v /= v.sum();
  return {v.data(), v.data() + n};
}

double oracle_transitivity(const Graph& g) {
  double closed = 0.0;
  double triples = 0.0;
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto inc = g.incident(c);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        triples += 1.0;
        if (adjacent(g, inc[i].node, inc[j].node)) closed += 1.0;
      }
    }
  }
  return triples == 0.0 ? 0.0 : closed / triples;
}

double oracle_average_local(const Graph& g) {
  if (g.node_count() == 0) return 0.0;
  double sum = 0.0;
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto inc = g.incident(c);
    if (inc.size() < 2) continue;
    double closed = 0.0;
    double pairs = 0.0;
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        pairs += 1.0;
        if (adjacent(g, inc[i].node, inc[j].node)) closed += 1.0;
      }
    }
    sum += closed / pairs;
  }
  return sum / static_cast<double>(g.node_count());
}

std::vector<std::vector<NodeId>> connected_subsets(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v) {
      if (mask & (1u << v)) members.push_back(v);
    }
    std::uint32_t seen = 1u << members.front();
    std::vector<NodeId> stack{members.front()};
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        const std::uint32_t bit = 1u << inc.node;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          stack.push_back(inc.node);
        }
      }
    }
    if (seen == mask) out.push_back(std::move(members));
  }
  return out;
}

}  // namespace convexa::testing
