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

#include "convexa/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

#include "convexa/error.hpp"

namespace convexa {

Graph::Graph()
    : Graph(std::make_shared<const Universe>(), {}, {}) {}

Graph::Graph(std::shared_ptr<const Universe> names, std::vector<Edge> edges,
             std::vector<double> weights)
    : names_(std::move(names)),
      edges_(std::move(edges)),
      weights_(std::move(weights)) {
  const std::size_t n = names_->ids.size();
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves every list
  // sorted by neighbor except for the interleaving of the two directions,
  // which the sort below fixes.
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    incidence_[cursor[e.u]++] = {e.v, id};
    incidence_[cursor[e.v]++] = {e.u, id};
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(incidence_.begin() + offsets_[v], incidence_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) { return a.node < b.node; });
  }
}

Graph Graph::from_parts(std::vector<std::string> ids, std::vector<Edge> edges,
                        std::vector<double> weights) {
  auto universe = std::make_shared<Universe>();
  universe->ids = std::move(ids);
  universe->index.reserve(universe->ids.size());
  for (NodeId i = 0; i < universe->ids.size(); ++i) {
    universe->index.emplace(universe->ids[i], i);
  }
  return Graph(std::move(universe), std::move(edges), std::move(weights));
}

std::optional<NodeId> Graph::find_node(std::string_view id) const {
  auto it = names_->index.find(std::string(id));
  if (it == names_->index.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::node(std::string_view id) const {
  if (auto v = find_node(id)) return *v;
  throw InvalidInput("unknown node '" + std::string(id) + "'");
}

double Graph::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  if (a >= node_count() || b >= node_count()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto inc = incident(a);
  auto it = std::lower_bound(inc.begin(), inc.end(), b,
                             [](const Incidence& x, NodeId key) { return x.node < key; });
  if (it == inc.end() || it->node != b) return std::nullopt;
  return it->edge;
}

EdgeId Graph::edge_id(NodeId a, NodeId b) const {
  if (auto e = find_edge(a, b)) return *e;
  std::ostringstream msg;
  msg << "no edge between ";
  msg << (a < node_count() ? name(a) : std::to_string(a)) << " and "
      << (b < node_count() ? name(b) : std::to_string(b));
  throw InvalidInput(msg.str());
}

Graph Graph::edge_subgraph(std::span<const EdgeId> keep) const {
  std::vector<EdgeId> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Edge> edges;
  std::vector<double> weights;
  edges.reserve(ids.size());
  weights.reserve(ids.size());
  for (EdgeId e : ids) {
    if (e >= edge_count()) {
      throw InvalidInput("edge id " + std::to_string(e) + " out of range");
    }
    edges.push_back(edges_[e]);
    weights.push_back(weights_[e]);
  }
  return Graph(names_, std::move(edges), std::move(weights));
}

Graph Graph::induced_subgraph(std::span<const NodeId> nodes) const {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(node_count(), kAbsent);
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  for (NodeId v : keep) {
    if (v >= node_count()) {
      throw InvalidInput("node id " + std::to_string(v) + " out of range");
    }
    remap[v] = static_cast<NodeId>(ids.size());
    ids.push_back(name(v));
  }
  std::vector<Edge> edges;
  std::vector<double> weights;
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[e];
    if (remap[ed.u] != kAbsent && remap[ed.v] != kAbsent) {
      edges.push_back({remap[ed.u], remap[ed.v]});
      weights.push_back(weights_[e]);
    }
  }
  // Order-preserving remap keeps edges sorted.
  return from_parts(std::move(ids), std::move(edges), std::move(weights));
}

bool Graph::same_universe(const Graph& other) const {
  return names_ == other.names_ || names_->ids == other.names_->ids;
}

GraphBuild build_graph(std::span<const EdgeRecord> records,
                       std::span<const std::string> isolated) {
  std::vector<std::string> ids;
  ids.reserve(records.size() * 2 + isolated.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const EdgeRecord& r = records[i];
    if (r.weight && !(std::isfinite(*r.weight) && *r.weight > 0.0)) {
      std::ostringstream msg;
      msg << "record " << i + 1 << " (" << r.u << ", " << r.v
          << "): weight must be positive, got " << *r.weight;
      throw InvalidInput(msg.str());
    }
    if (r.u.empty() || r.v.empty()) {
      throw InvalidInput("record " + std::to_string(i + 1) + ": empty node identifier");
    }
    ids.push_back(r.u);
    ids.push_back(r.v);
  }
  for (const std::string& id : isolated) {
    if (id.empty()) throw InvalidInput("empty node identifier");
    ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  auto index_of = [&ids](const std::string& id) {
    return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  GraphBuild out;
  std::map<Edge, double> merged;
  for (const EdgeRecord& r : records) {
    NodeId a = index_of(r.u);
    NodeId b = index_of(r.v);
    if (a == b) {
      ++out.dropped_self_loops;
      continue;
    }
    if (a > b) std::swap(a, b);
    merged[Edge{a, b}] += r.weight.value_or(1.0);
  }
  std::vector<Edge> edges;
  std::vector<double> weights;
  edges.reserve(merged.size());
  weights.reserve(merged.size());
  for (const auto& [e, w] : merged) {
    edges.push_back(e);
    weights.push_back(w);
  }
  out.graph = Graph::from_parts(std::move(ids), std::move(edges), std::move(weights));
  return out;
}

}  // namespace convexa
