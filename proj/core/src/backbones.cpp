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

#include "convexa/backbones.hpp"

#include <algorithm>
#include <numeric>

#include "brandes.hpp"
#include "convexa/error.hpp"
#include "convexa/traversal.hpp"

namespace convexa {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<std::uint8_t> rank_;
};

// Edge ids sorted by descending score; equal scores keep id order, or a
// seeded shuffle of it.
std::vector<EdgeId> rank_edges(std::span<const double> scores, const TieRule& tie_break) {
  std::vector<EdgeId> order(scores.size());
  std::iota(order.begin(), order.end(), EdgeId{0});
  if (tie_break.kind == TieBreak::kRandom) {
    Rng rng = make_stream(tie_break.seed, 0);
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[uniform_index(rng, i)]);
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&scores](EdgeId a, EdgeId b) { return scores[a] > scores[b]; });
  return order;
}

}  // namespace

std::string_view to_string(BackboneKind kind) {
  switch (kind) {
    case BackboneKind::kMaxSpanningTree:
      return "spanning_tree";
    case BackboneKind::kHighBetweenness:
      return "betweenness_edges";
    case BackboneKind::kHighEmbeddedness:
      return "embeddedness_edges";
    case BackboneKind::kConvexSkeleton:
      return "convex_skeleton";
  }
  return "convex_skeleton";
}

std::optional<BackboneKind> parse_backbone_kind(std::string_view text) {
  if (text == "mst" || text == "spanning_tree") return BackboneKind::kMaxSpanningTree;
  if (text == "betweenness" || text == "betweenness_edges") return BackboneKind::kHighBetweenness;
  if (text == "embeddedness" || text == "embeddedness_edges") return BackboneKind::kHighEmbeddedness;
  if (text == "skeleton" || text == "convex_skeleton") return BackboneKind::kConvexSkeleton;
  return std::nullopt;
}

Backbone maximum_spanning_tree(const Graph& g, const TieRule& tie_break) {
  if (!is_connected(g)) {
    throw PreconditionError("maximum spanning tree requires a connected graph");
  }
  Backbone tree{BackboneKind::kMaxSpanningTree, {}};
  if (g.node_count() == 0) return tree;
  tree.edges.reserve(g.node_count() - 1);
  DisjointSets sets(g.node_count());
  for (EdgeId e : rank_edges(g.weights(), tie_break)) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) {
      tree.edges.push_back(e);
      if (tree.edges.size() + 1 == g.node_count()) break;
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

std::vector<double> edge_betweenness(const Graph& g) {
  std::vector<double> scores;
  detail::brandes(g, nullptr, &scores);
  return scores;
}

double embeddedness(const Graph& g, EdgeId e) {
  if (e >= g.edge_count()) throw InvalidInput("unknown edge id " + std::to_string(e));
  const Edge& ed = g.edge(e);
  auto a = g.incident(ed.u);
  auto b = g.incident(ed.v);
  std::size_t shared = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].node < b[j].node) {
      ++i;
    } else if (b[j].node < a[i].node) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  // Each endpoint lists the other; drop both from the union.
  const std::size_t combined = a.size() + b.size() - shared - 2;
  if (combined == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(combined);
}

std::vector<double> embeddedness_scores(const Graph& g) {
  std::vector<double> scores(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) scores[e] = embeddedness(g, e);
  return scores;
}

Backbone top_m_edge_backbone(const Graph& g, std::span<const double> scores, std::size_t m,
                             BackboneKind kind, const TieRule& tie_break) {
  if (scores.size() != g.edge_count()) {
    throw InvalidInput("expected one score per edge");
  }
  if (m > g.edge_count()) {
    throw InvalidInput("backbone size " + std::to_string(m) + " exceeds edge count " +
                       std::to_string(g.edge_count()));
  }
  std::vector<EdgeId> order = rank_edges(scores, tie_break);
  order.resize(m);
  std::sort(order.begin(), order.end());
  return {kind, std::move(order)};
}

Backbone skeleton_backbone(const SkeletonResult& sk) {
  return {BackboneKind::kConvexSkeleton, sk.kept};
}

}  // namespace convexa
