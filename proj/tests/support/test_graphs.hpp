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

#ifndef CONVEXA_TESTS_SUPPORT_TEST_GRAPHS_HPP_
#define CONVEXA_TESTS_SUPPORT_TEST_GRAPHS_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "convexa/graph.hpp"

namespace convexa::testing {

// Unit-weight graph from named pairs.
Graph make_graph(std::initializer_list<std::pair<const char*, const char*>> pairs);

// Weighted variant.
struct WeightedPair {
  const char* u;
  const char* v;
  double w;
};
Graph make_weighted(std::initializer_list<WeightedPair> edges);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

// Triangle a-b-c with pendant edge c-d.
Graph paw();
// 4-cycle a-b-c-d with chord b-d.
Graph diamond();

// Random connected graph: a random spanning tree plus each other pair with
// probability p. Node names are zero-padded so id order equals label order.
Graph random_connected(std::mt19937_64& rng, std::size_t n, double p);

// Random graph that may be disconnected.
Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);

// Same graph with identifiers permuted; returns the new graph and
// new_id[old_id].
std::pair<Graph, std::vector<NodeId>> relabel(const Graph& g, std::mt19937_64& rng);

Graph read_test_graph(const std::string& file_name);

}  // namespace convexa::testing

#endif  // CONVEXA_TESTS_SUPPORT_TEST_GRAPHS_HPP_
