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

#include "convexa/synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "convexa/error.hpp"
#include "convexa/traversal.hpp"

namespace convexa {
namespace {

// Collects edges between integer-labelled nodes.
class EdgeSink {
 public:
  explicit EdgeSink(std::size_t n) : n_(n) {}

  bool add(std::size_t a, std::size_t b) {
    if (a == b) return false;
    return pairs_.insert({std::min(a, b), std::max(a, b)}).second;
  }
  bool has(std::size_t a, std::size_t b) const {
    return pairs_.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  std::size_t size() const { return pairs_.size(); }

  Graph build() const {
    std::vector<EdgeRecord> records;
    records.reserve(pairs_.size());
    for (const auto& [a, b] : pairs_) records.push_back({std::to_string(a), std::to_string(b), std::nullopt});
    std::vector<std::string> nodes;
    nodes.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) nodes.push_back(std::to_string(v));
    return build_graph(records, nodes).graph;
  }

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> pairs_;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput("invalid generator parameters: " + what);
}

std::size_t draw_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(uniform_index(rng, hi - lo + 1));
}

// Grows cliques one at a time, each sharing exactly one node with a
// uniformly chosen earlier clique. `next_size` returns 0 to stop.
template <typename NextSize>
std::size_t grow_cliques(EdgeSink& sink, Rng& rng, NextSize&& next_size) {
  std::vector<std::vector<std::size_t>> cliques;
  std::size_t nodes = 0;
  for (std::size_t size; (size = next_size(cliques.size(), nodes)) != 0;) {
    std::vector<std::size_t> members;
    if (!cliques.empty()) {
      const auto& host = cliques[uniform_index(rng, cliques.size())];
      members.push_back(host[uniform_index(rng, host.size())]);
    }
    while (members.size() < size) members.push_back(nodes++);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) sink.add(members[i], members[j]);
    }
    cliques.push_back(std::move(members));
  }
  return nodes;
}

GeneratedGraph tree_of_cliques(const GeneratorSpec& spec) {
  Rng rng = make_stream(spec.seed, 0);
  std::vector<std::size_t> sizes = spec.clique_sizes;
  if (sizes.empty()) {
    require(spec.cliques >= 1, "tree_of_cliques needs at least one clique");
    require(spec.min_clique >= 2 && spec.min_clique <= spec.max_clique,
            "clique sizes need 2 <= min <= max");
    for (std::size_t i = 0; i < spec.cliques; ++i) {
      sizes.push_back(draw_size(rng, spec.min_clique, spec.max_clique));
    }
  }
  for (std::size_t s : sizes) require(s >= 2, "clique sizes must be at least 2");
  // Total node count is known up front: the first clique is new, each later
  // one adds size - 1 nodes.
  std::size_t n = sizes.front();
  for (std::size_t i = 1; i < sizes.size(); ++i) n += sizes[i] - 1;
  EdgeSink sink(n);
  grow_cliques(sink, rng, [&sizes](std::size_t index, std::size_t) {
    return index < sizes.size() ? sizes[index] : 0;
  });
  return {sink.build(), 0};
}

GeneratedGraph clustered(const GeneratorSpec& spec) {
  require(spec.n >= 2, "clustered needs n >= 2");
  require(spec.min_clique >= 2 && spec.min_clique <= spec.max_clique,
          "clique sizes need 2 <= min <= max");
  const std::size_t max_edges = spec.n * (spec.n - 1) / 2;
  require(spec.edges <= max_edges, "more edges than node pairs");
  Rng rng = make_stream(spec.seed, 0);
  EdgeSink sink(spec.n);
  grow_cliques(sink, rng, [&](std::size_t index, std::size_t nodes) -> std::size_t {
    if (nodes >= spec.n) return 0;
    const std::size_t size = draw_size(rng, spec.min_clique, spec.max_clique);
    // Later cliques reuse one existing node.
    const std::size_t room = spec.n - nodes + (index == 0 ? 0 : 1);
    return std::min(size, room);
  });
  require(sink.size() <= spec.edges,
          "the clique tree already has " + std::to_string(sink.size()) + " edges");
  while (sink.size() < spec.edges) {
    sink.add(uniform_index(rng, spec.n), uniform_index(rng, spec.n));
  }
  return {sink.build(), 0};
}

GeneratedGraph er_random(const GeneratorSpec& spec) {
  require(spec.n >= 1, "er_random needs n >= 1");
  require(spec.p >= 0.0 && spec.p <= 1.0, "p must lie in [0, 1]");
  GeneratedGraph out;
  for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
    Rng rng = make_stream(spec.seed, attempt);
    EdgeSink sink(spec.n);
    for (std::size_t a = 0; a < spec.n; ++a) {
      for (std::size_t b = a + 1; b < spec.n; ++b) {
        if (uniform_real(rng) < spec.p) sink.add(a, b);
      }
    }
    Graph g = sink.build();
    if (!spec.connected || is_connected(g)) {
      out.graph = std::move(g);
      return out;
    }
    ++out.rejections;
  }
  throw InvalidInput("no connected ER sample after " + std::to_string(spec.max_attempts) +
                     " attempts");
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kErRandom:
      return "er_random";
    case GeneratorKind::kTreeOfCliques:
      return "tree_of_cliques";
    case GeneratorKind::kTriangularLattice:
      return "triangular_lattice";
    case GeneratorKind::kPath:
      return "path";
    case GeneratorKind::kCycle:
      return "cycle";
    case GeneratorKind::kComplete:
      return "complete";
    case GeneratorKind::kStar:
      return "star";
    case GeneratorKind::kClustered:
      return "clustered";
  }
  return "path";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  for (GeneratorKind k : {GeneratorKind::kErRandom, GeneratorKind::kTreeOfCliques,
                          GeneratorKind::kTriangularLattice, GeneratorKind::kPath,
                          GeneratorKind::kCycle, GeneratorKind::kComplete, GeneratorKind::kStar,
                          GeneratorKind::kClustered}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

GeneratedGraph generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorKind::kErRandom:
      return er_random(spec);
    case GeneratorKind::kTreeOfCliques:
      return tree_of_cliques(spec);
    case GeneratorKind::kClustered:
      return clustered(spec);
    case GeneratorKind::kTriangularLattice: {
      require(spec.rows >= 1 && spec.cols >= 1, "lattice needs rows, cols >= 1");
      EdgeSink sink(spec.rows * spec.cols);
      auto id = [&spec](std::size_t r, std::size_t c) { return r * spec.cols + c; };
      for (std::size_t r = 0; r < spec.rows; ++r) {
        for (std::size_t c = 0; c < spec.cols; ++c) {
          if (c + 1 < spec.cols) sink.add(id(r, c), id(r, c + 1));
          if (r + 1 < spec.rows) sink.add(id(r, c), id(r + 1, c));
          if (r + 1 < spec.rows && c + 1 < spec.cols) sink.add(id(r, c), id(r + 1, c + 1));
        }
      }
      return {sink.build(), 0};
    }
    case GeneratorKind::kPath:
    case GeneratorKind::kCycle:
    case GeneratorKind::kComplete:
    case GeneratorKind::kStar: {
      require(spec.n >= 1, "n must be at least 1");
      require(spec.kind != GeneratorKind::kCycle || spec.n >= 3, "a cycle needs n >= 3");
      EdgeSink sink(spec.n);
      for (std::size_t v = 1; v < spec.n; ++v) {
        if (spec.kind == GeneratorKind::kStar) {
          sink.add(0, v);
        } else if (spec.kind == GeneratorKind::kComplete) {
          for (std::size_t u = 0; u < v; ++u) sink.add(u, v);
        } else {
          sink.add(v - 1, v);
        }
      }
      if (spec.kind == GeneratorKind::kCycle) sink.add(spec.n - 1, 0);
      return {sink.build(), 0};
    }
  }
  throw InvalidInput("unknown generator kind");
}

}  // namespace convexa
