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

#ifndef CONVEXA_GRAPH_HPP_
#define CONVEXA_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace convexa {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// An undirected edge stored with u < v.
struct Edge {
  NodeId u;
  NodeId v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  NodeId node;
  EdgeId edge;
};

// One line of an edge list. A missing weight means 1.0.
struct EdgeRecord {
  std::string u;
  std::string v;
  std::optional<double> weight;
};

// Sorted, duplicate-free list of edge ids of one Graph. Skeletons and
// backbones are edge subsets over the node universe of their source graph.
using EdgeSubset = std::vector<EdgeId>;

// Immutable undirected simple graph with positive edge weights.
//
// Node identifiers are opaque strings. They are mapped to dense indices in
// ascending identifier order, so comparing two NodeIds is the same as
// comparing their identifiers. Edges are numbered in ascending (u, v) order.
// Graphs derived through edge_subgraph() share the node universe of their
// parent.
class Graph {
 public:
  Graph();

  std::size_t node_count() const { return names_->ids.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(NodeId v) const { return names_->ids[v]; }
  std::span<const std::string> names() const { return names_->ids; }
  std::optional<NodeId> find_node(std::string_view id) const;
  // Throws InvalidInput for an unknown identifier.
  NodeId node(std::string_view id) const;

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  double weight(EdgeId e) const { return weights_[e]; }
  std::span<const double> weights() const { return weights_; }
  double total_weight() const;

  // Incident edges of v, sorted by neighbor.
  std::span<const Incidence> incident(NodeId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  // Throws InvalidInput when a and b are not adjacent.
  EdgeId edge_id(NodeId a, NodeId b) const;

  // Same node universe, only the listed edges (original weights).
  Graph edge_subgraph(std::span<const EdgeId> keep) const;
  // New universe made of the listed nodes and every edge between them.
  Graph induced_subgraph(std::span<const NodeId> nodes) const;

  bool same_universe(const Graph& other) const;

  // Low-level constructor: `ids` must be sorted and unique, `edges` sorted,
  // unique, with u < v, and `weights` positive.
  static Graph from_parts(std::vector<std::string> ids, std::vector<Edge> edges,
                          std::vector<double> weights);

 private:
  struct Universe {
    std::vector<std::string> ids;
    std::unordered_map<std::string, NodeId> index;
  };

  Graph(std::shared_ptr<const Universe> names, std::vector<Edge> edges,
        std::vector<double> weights);

  std::shared_ptr<const Universe> names_;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
};

struct GraphBuild {
  Graph graph;
  std::size_t dropped_self_loops = 0;
};

// Builds a graph from edge records. Self-loops are dropped and counted,
// duplicate pairs are merged by summing their weights, and `isolated` adds
// nodes that have no edges. Throws InvalidInput naming the record when a
// weight is not a positive finite number.
GraphBuild build_graph(std::span<const EdgeRecord> records,
                       std::span<const std::string> isolated = {});

}  // namespace convexa

#endif  // CONVEXA_GRAPH_HPP_
