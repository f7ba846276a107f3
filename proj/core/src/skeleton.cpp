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

#include "convexa/skeleton.hpp"

#include <algorithm>
#include <cmath>

#include "blocks.hpp"
#include "clustering_detail.hpp"
#include "convexa/error.hpp"
#include "convexa/traversal.hpp"

namespace convexa {
namespace {

__extension__ using Wide = __int128;

// Mutable copy of the graph that tracks per-node triangle counts so the
// effect of removing one edge on either objective is O(degree).
class ShrinkingGraph {
 public:
  explicit ShrinkingGraph(const Graph& g)
      : g_(g),
        adj_(g.node_count()),
        alive_(g.edge_count(), true),
        triangles_(g.node_count(), 0),
        degrees_(g.node_count(), 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      auto inc = g.incident(v);
      adj_[v].assign(inc.begin(), inc.end());
      degrees_[v] = static_cast<std::int64_t>(inc.size());
      triples_ += degrees_[v] * (degrees_[v] - 1) / 2;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const std::int64_t c = common_neighbors(g.edge(e).u, g.edge(e).v);
      // Each triangle at v is seen from both of its edges incident to v.
      triangles_[g.edge(e).u] += c;
      triangles_[g.edge(e).v] += c;
    }
    for (auto& t : triangles_) {
      t /= 2;
      node_triangles_ += t;
    }
  }

  std::size_t node_count() const { return adj_.size(); }
  const std::vector<Incidence>& incident(NodeId v) const { return adj_[v]; }
  bool alive(EdgeId e) const { return alive_[e]; }

  template <typename Fn>
  void for_each_common(NodeId u, NodeId v, Fn&& fn) const {
    auto a = adj_[u].begin();
    auto b = adj_[v].begin();
    while (a != adj_[u].end() && b != adj_[v].end()) {
      if (a->node < b->node) {
        ++a;
      } else if (b->node < a->node) {
        ++b;
      } else {
        fn(a->node);
        ++a;
        ++b;
      }
    }
  }

  std::int64_t common_neighbors(NodeId u, NodeId v) const {
    std::int64_t c = 0;
    for_each_common(u, v, [&c](NodeId) { ++c; });
    return c;
  }

  // Transitivity after removing e, as the exact fraction num / den.
  std::pair<std::int64_t, std::int64_t> transitivity_without(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    const std::int64_t c = common_neighbors(ed.u, ed.v);
    const std::int64_t num = node_triangles_ - 3 * c;
    const std::int64_t den = triples_ - (degrees_[ed.u] - 1) - (degrees_[ed.v] - 1);
    if (den == 0) return {0, 1};
    return {num, den};
  }

  // Change in the sum of local clustering values when e is removed.
  double local_sum_delta(EdgeId e) const {
    const Edge& ed = g_.edge(e);
    double delta = 0.0;
    std::int64_t c = 0;
    for_each_common(ed.u, ed.v, [&](NodeId w) {
      ++c;
      delta += detail::local_clustering(triangles_[w] - 1, degrees_[w]) -
               detail::local_clustering(triangles_[w], degrees_[w]);
    });
    for (NodeId x : {ed.u, ed.v}) {
      delta += detail::local_clustering(triangles_[x] - c, degrees_[x] - 1) -
               detail::local_clustering(triangles_[x], degrees_[x]);
    }
    return delta;
  }

  void remove(EdgeId e) {
    const Edge& ed = g_.edge(e);
    std::int64_t c = 0;
    for_each_common(ed.u, ed.v, [&](NodeId w) {
      ++c;
      --triangles_[w];
    });
    triangles_[ed.u] -= c;
    triangles_[ed.v] -= c;
    node_triangles_ -= 3 * c;
    triples_ -= (degrees_[ed.u] - 1) + (degrees_[ed.v] - 1);
    --degrees_[ed.u];
    --degrees_[ed.v];
    for (NodeId x : {ed.u, ed.v}) {
      const NodeId other = x == ed.u ? ed.v : ed.u;
      auto& list = adj_[x];
      list.erase(std::find_if(list.begin(), list.end(),
                              [other](const Incidence& i) { return i.node == other; }));
    }
    alive_[e] = false;
  }

  double objective(ClusteringObjective kind) const {
    if (kind == ClusteringObjective::kGlobalTransitivity) {
      return detail::transitivity(node_triangles_, triples_);
    }
    return detail::average_local(triangles_, degrees_);
  }

  // True once every block of the current graph is a clique.
  bool blocks_are_cliques(const std::vector<EdgeSubset>& blocks) const {
    std::vector<NodeId> nodes;
    for (const EdgeSubset& block : blocks) {
      nodes.clear();
      for (EdgeId e : block) {
        nodes.push_back(g_.edge(e).u);
        nodes.push_back(g_.edge(e).v);
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      if (block.size() != nodes.size() * (nodes.size() - 1) / 2) return false;
    }
    return true;
  }

 private:
  const Graph& g_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<bool> alive_;
  std::vector<std::int64_t> triangles_;
  std::vector<std::int64_t> degrees_;
  std::int64_t node_triangles_ = 0;
  std::int64_t triples_ = 0;
};

// Relative tolerance under which two average-local deltas count as tied.
constexpr double kLocalTieTolerance = 1e-12;

void check_pair(const Graph& g, const SkeletonResult& sk) {
  if (sk.node_count != g.node_count() || sk.edge_count != g.edge_count() ||
      sk.kept.size() + sk.removed.size() != g.edge_count()) {
    throw InvalidInput("skeleton was not extracted from this graph");
  }
  for (EdgeId e : sk.kept) {
    if (e >= g.edge_count()) throw InvalidInput("skeleton edge id out of range");
  }
}

}  // namespace

std::string_view to_string(ClusteringObjective objective) {
  switch (objective) {
    case ClusteringObjective::kGlobalTransitivity:
      return "global";
    case ClusteringObjective::kAverageLocal:
      return "local";
  }
  return "global";
}

std::optional<ClusteringObjective> parse_objective(std::string_view text) {
  if (text == "global" || text == "transitivity") return ClusteringObjective::kGlobalTransitivity;
  if (text == "local" || text == "average_local") return ClusteringObjective::kAverageLocal;
  return std::nullopt;
}

SkeletonResult extract_convex_skeleton(const Graph& g, const SkeletonOptions& options) {
  if (!is_connected(g)) {
    throw PreconditionError("convex skeleton requires a connected graph");
  }
  SkeletonResult result;
  result.objective = options.objective;
  result.node_count = g.node_count();
  result.edge_count = g.edge_count();

  ShrinkingGraph state(g);
  Rng rng = make_stream(options.tie_break.seed, 0);
  const bool global = options.objective == ClusteringObjective::kGlobalTransitivity;
  std::vector<EdgeId> best;

  for (;;) {
    const auto blocks = detail::decompose_blocks(
        state.node_count(), [&state](NodeId v) -> const std::vector<Incidence>& {
          return state.incident(v);
        });
    if (state.blocks_are_cliques(blocks)) break;

    std::vector<bool> bridge(g.edge_count(), false);
    for (const EdgeSubset& block : blocks) {
      if (block.size() == 1) bridge[block.front()] = true;
    }

    best.clear();
    std::pair<std::int64_t, std::int64_t> best_fraction{0, 1};
    double best_delta = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!state.alive(e) || bridge[e]) continue;
      int cmp = 0;
      if (global) {
        const auto f = state.transitivity_without(e);
        if (!best.empty()) {
          const Wide lhs = static_cast<Wide>(f.first) * best_fraction.second;
          const Wide rhs = static_cast<Wide>(best_fraction.first) * f.second;
          cmp = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
        }
        if (best.empty() || cmp > 0) best_fraction = f;
      } else {
        const double d = state.local_sum_delta(e);
        if (!best.empty()) {
          const double tol = kLocalTieTolerance * std::max(1.0, std::abs(best_delta));
          cmp = d > best_delta + tol ? 1 : (d < best_delta - tol ? -1 : 0);
        }
        if (best.empty() || cmp > 0) best_delta = d;
      }
      if (best.empty() || cmp > 0) {
        best.assign(1, e);
      } else if (cmp == 0) {
        best.push_back(e);
      }
    }
    // A graph whose blocks are not all cliques has a cycle, hence a
    // non-bridge edge.
    if (best.empty()) throw Error("skeleton search found no removable edge");

    EdgeId chosen = best.front();
    if (options.tie_break.kind == TieBreak::kRandom && best.size() > 1) {
      chosen = best[uniform_index(rng, best.size())];
    }
    state.remove(chosen);
    result.removed.push_back({chosen, state.objective(options.objective)});
  }

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (state.alive(e)) result.kept.push_back(e);
  }
  return result;
}

Graph skeleton_graph(const Graph& g, const SkeletonResult& sk) {
  check_pair(g, sk);
  return g.edge_subgraph(sk.kept);
}

Graph remainder(const Graph& g, const SkeletonResult& sk) {
  check_pair(g, sk);
  std::vector<EdgeId> dropped;
  dropped.reserve(sk.removed.size());
  for (const RemovalStep& step : sk.removed) dropped.push_back(step.edge);
  return g.edge_subgraph(dropped);
}

RetainedFraction retained_weight_fraction(const Graph& g, const SkeletonResult& sk) {
  check_pair(g, sk);
  if (g.edge_count() == 0) return {1.0, 1.0};
  double kept_weight = 0.0;
  for (EdgeId e : sk.kept) kept_weight += g.weight(e);
  return {static_cast<double>(sk.kept.size()) / static_cast<double>(g.edge_count()),
          kept_weight / g.total_weight()};
}

double clustering_objective(const Graph& g, ClusteringObjective objective) {
  return ShrinkingGraph(g).objective(objective);
}

}  // namespace convexa
