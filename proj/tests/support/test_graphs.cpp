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

#include "support/test_graphs.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "convexa/edge_list_io.hpp"

namespace convexa::testing {
namespace {

std::string label(std::size_t i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "v%03zu", i);
  return buf;
}

Graph from_index_pairs(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<EdgeRecord> records;
  for (const auto& [a, b] : pairs) records.push_back({label(a), label(b), std::nullopt});
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(label(i));
  return build_graph(records, nodes).graph;
}

}  // namespace

Graph make_graph(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<EdgeRecord> records;
  for (const auto& [u, v] : pairs) records.push_back({u, v, std::nullopt});
  return build_graph(records).graph;
}

Graph make_weighted(std::initializer_list<WeightedPair> edges) {
  std::vector<EdgeRecord> records;
  for (const auto& e : edges) records.push_back({e.u, e.v, e.w});
  return build_graph(records).graph;
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(i - 1, i);
  return from_index_pairs(n, pairs);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return from_index_pairs(n, pairs);
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return from_index_pairs(n, pairs);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return from_index_pairs(leaves + 1, pairs);
}

Graph paw() { return make_graph({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"c", "d"}}); }

Graph diamond() {
  return make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}, {"b", "d"}});
}

Graph random_connected(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    pairs.emplace_back(order[pick(rng)], order[i]);
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) pairs.emplace_back(a, b);
    }
  }
  // Duplicates merge by summing weights; reset to unit weight.
  Graph g = from_index_pairs(n, pairs);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<std::string> names(g.names().begin(), g.names().end());
  return Graph::from_parts(std::move(names), std::move(edges), std::vector<double>(g.edge_count(), 1.0));
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::bernoulli_distribution coin(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) pairs.emplace_back(a, b);
    }
  }
  return from_index_pairs(n, pairs);
}

std::pair<Graph, std::vector<NodeId>> relabel(const Graph& g, std::mt19937_64& rng) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<EdgeRecord> records;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    records.push_back({label(perm[g.edge(e).u]), label(perm[g.edge(e).v]), g.weight(e)});
  }
  std::vector<std::string> nodes;
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(label(i));
  Graph out = build_graph(records, nodes).graph;
  std::vector<NodeId> new_id(n);
  for (std::size_t i = 0; i < n; ++i) new_id[i] = out.node(label(perm[i]));
  return {std::move(out), std::move(new_id)};
}

Graph read_test_graph(const std::string& file_name) {
  return read_edge_list(std::string(CONVEXA_TEST_DATA_DIR) + "/" + file_name).graph;
}

}  // namespace convexa::testing
