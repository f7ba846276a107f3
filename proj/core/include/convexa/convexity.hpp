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

#ifndef CONVEXA_CONVEXITY_HPP_
#define CONVEXA_CONVEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "convexa/graph.hpp"
#include "convexa/random.hpp"

namespace convexa {

// Geodesic closure of `seeds`: the smallest node set that contains the seeds
// and every node on every shortest path between two of its members.
// Requires a connected graph and a nonempty seed set; returns sorted ids.
std::vector<NodeId> convex_hull(const Graph& g, std::span<const NodeId> seeds);

// True iff the subgraph induced by `nodes` contains all shortest paths
// between its members, i.e. convex_hull(g, nodes) == nodes.
bool is_convex(const Graph& g, std::span<const NodeId> nodes);

// One run of random convex expansion. Entry t is |S| after t steps: step 0
// picks a uniform node, every later step follows a uniform edge leaving S and
// then replaces S by its hull. The result always has node_count() entries;
// once S covers the graph the remaining entries equal n.
std::vector<std::size_t> expansion_run(const Graph& g, Rng& rng);

// Position-wise average of expansion runs. `totals[t]` is the exact sum of
// |S| after t steps over all runs, s[t] = totals[t] / (runs * n).
struct ExpansionProfile {
  std::size_t n = 0;
  std::size_t runs = 0;
  std::vector<std::uint64_t> totals;
  std::vector<double> s;
};

struct ConvexityScore {
  double x = 0.0;
  ExpansionProfile profile;
  std::uint64_t seed = kDefaultSeed;
};

struct ConvexityOptions {
  std::size_t runs = 100;
  std::uint64_t seed = kDefaultSeed;
  // Worker threads; 0 picks the hardware concurrency. The result does not
  // depend on this value.
  unsigned threads = 0;
};

// X = 1 - sum_{t=1}^{n-1} max(s(t) - s(t-1) - 1/n, 0), evaluated on the
// integer totals so that trees, cliques and other fully convex graphs score
// exactly 1.
double convexity_measure(const ExpansionProfile& profile);

// Monte Carlo convexity of a connected graph with at least two nodes. Run r
// draws from make_stream(seed, r).
ConvexityScore convexity(const Graph& g, const ConvexityOptions& options = {});

// True iff every biconnected block of the connected graph g is complete
// (g is a block graph, or tree of cliques).
bool is_tree_of_cliques(const Graph& g);

}  // namespace convexa

#endif  // CONVEXA_CONVEXITY_HPP_
