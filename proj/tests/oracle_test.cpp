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

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

namespace convexa {
namespace {

TEST(Oracles, ShortestPathEnumeration) {
  const Graph c4 = testing::cycle_graph(4);
  const auto d = testing::floyd_distances(c4);
  EXPECT_EQ(d[0][2], 2);
  EXPECT_EQ(testing::all_shortest_paths(c4, d, 0, 2).size(), 2u);
  EXPECT_EQ(testing::all_shortest_paths(c4, d, 0, 1).size(), 1u);
}

TEST(Oracles, HullAndConvexity) {
  const Graph c4 = testing::cycle_graph(4);
  EXPECT_EQ(testing::oracle_hull(c4, {0, 2}).size(), 4u);
  EXPECT_TRUE(testing::oracle_is_convex(c4, {0, 1}));
  EXPECT_FALSE(testing::oracle_is_convex(c4, {0, 1, 2}));
}

TEST(Oracles, Betweenness) {
  const auto star = testing::oracle_node_betweenness(testing::star_graph(4));
  EXPECT_DOUBLE_EQ(star[0], 6.0);
  for (double e : testing::oracle_edge_betweenness(testing::cycle_graph(4))) EXPECT_DOUBLE_EQ(e, 2.0);
}

TEST(Oracles, SpanningTreeAndClustering) {
  const Graph tri = testing::make_weighted({{"a", "b", 3}, {"b", "c", 2}, {"a", "c", 1}});
  EXPECT_DOUBLE_EQ(testing::oracle_max_spanning_weight(tri), 5.0);
  EXPECT_DOUBLE_EQ(testing::oracle_transitivity(testing::paw()), 0.6);
  EXPECT_DOUBLE_EQ(testing::oracle_average_local(testing::paw()), 7.0 / 12.0);
}

TEST(Oracles, PageRankEigenvector) {
  const auto star = testing::oracle_pagerank(testing::star_graph(3), 0.85);
  EXPECT_NEAR(star[0], 0.8875 / 1.85, 1e-10);
}

TEST(Oracles, ConnectedSubsetsOfPath) {
  // A path on n nodes has n(n+1)/2 connected subsets.
  EXPECT_EQ(testing::connected_subsets(testing::path_graph(5)).size(), 15u);
}

}  // namespace
}  // namespace convexa
