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

#ifndef CONVEXA_SYNTH_HPP_
#define CONVEXA_SYNTH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "convexa/graph.hpp"
#include "convexa/random.hpp"

namespace convexa {

enum class GeneratorKind {
  kErRandom,
  kTreeOfCliques,
  kTriangularLattice,
  kPath,
  kCycle,
  kComplete,
  kStar,
  // Tree of cliques grown to `n` nodes, then topped up with uniformly random
  // extra edges until it has `edges` edges.
  kClustered,
};

std::string_view to_string(GeneratorKind kind);
std::optional<GeneratorKind> parse_generator_kind(std::string_view text);

// Parameters per kind:
//   ER_RANDOM           n, p, connected (resample until connected)
//   TREE_OF_CLIQUES     cliques with sizes uniform in [min_clique, max_clique],
//                       or the explicit clique_sizes
//   TRIANGULAR_LATTICE  rows, cols
//   PATH, CYCLE, COMPLETE, STAR   n (STAR: one hub and n - 1 leaves)
//   CLUSTERED           n, edges, min_clique, max_clique
// Nodes are named by decimal index.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kPath;
  std::size_t n = 0;
  double p = 0.0;
  bool connected = false;
  std::size_t cliques = 0;
  std::size_t min_clique = 2;
  std::size_t max_clique = 4;
  std::vector<std::size_t> clique_sizes;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t edges = 0;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_attempts = 10000;
};

struct GeneratedGraph {
  Graph graph;
  // ER samples discarded for being disconnected.
  std::size_t rejections = 0;
};

// Deterministic given the spec. Throws InvalidInput for invalid parameters.
GeneratedGraph generate(const GeneratorSpec& spec);

}  // namespace convexa

#endif  // CONVEXA_SYNTH_HPP_
