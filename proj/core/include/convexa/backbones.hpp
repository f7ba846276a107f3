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

#ifndef CONVEXA_BACKBONES_HPP_
#define CONVEXA_BACKBONES_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "convexa/graph.hpp"
#include "convexa/random.hpp"
#include "convexa/skeleton.hpp"

namespace convexa {

enum class BackboneKind {
  kMaxSpanningTree,
  kHighBetweenness,
  kHighEmbeddedness,
  kConvexSkeleton,
};

std::string_view to_string(BackboneKind kind);
std::optional<BackboneKind> parse_backbone_kind(std::string_view text);

struct Backbone {
  BackboneKind kind;
  EdgeSubset edges;
};

// Kruskal on descending weight. Equal weights are taken in edge-id order
// (smallest identifiers first) or in a seeded random order.
Backbone maximum_spanning_tree(const Graph& g, const TieRule& tie_break = {});

// Unnormalized edge betweenness indexed by EdgeId: for every unordered pair
// of nodes, the fraction of its shortest paths that use the edge.
std::vector<double> edge_betweenness(const Graph& g);

// Neighborhood overlap |N(u) & N(v)| / |(N(u) | N(v)) - {u, v}|, 0 when the
// union is empty.
double embeddedness(const Graph& g, EdgeId e);
std::vector<double> embeddedness_scores(const Graph& g);

// The m best-scoring edges, ties ordered as in maximum_spanning_tree().
Backbone top_m_edge_backbone(const Graph& g, std::span<const double> scores, std::size_t m,
                             BackboneKind kind, const TieRule& tie_break = {});

Backbone skeleton_backbone(const SkeletonResult& sk);

}  // namespace convexa

#endif  // CONVEXA_BACKBONES_HPP_
