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

#include "convexa/convexity.hpp"

#include <algorithm>
#include <thread>

#include "convexa/error.hpp"
#include "convexa/traversal.hpp"

namespace convexa {
namespace {

// Hop-distance rows computed on first use. Once fill() has run, row() only
// reads and the table can be shared between threads.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g) : g_(g), rows_(g.node_count()) {}

  const std::int32_t* row(NodeId v) {
    if (rows_[v].empty()) rows_[v] = bfs_distances(g_, v).dist;
    return rows_[v].data();
  }

  void fill() {
    for (NodeId v = 0; v < g_.node_count(); ++v) row(v);
  }

 private:
  const Graph& g_;
  std::vector<std::vector<std::int32_t>> rows_;
};

// Incremental geodesic closure. Every pair of members is examined once: when
// a node w is closed against the members processed before it, each member u
// contributes its neighbors one step closer to w. Those neighbors join the
// pending queue and are paired with everything later, which walks the whole
// u-w interval without revisiting nodes already inside the set.
class HullBuilder {
 public:
  HullBuilder(const Graph& g, DistanceTable& table)
      : g_(g), table_(table), in_set_(g.node_count(), false) {}

  void clear() {
    for (NodeId v : processed_) in_set_[v] = false;
    processed_.clear();
    pending_.clear();
  }

  std::size_t size() const { return processed_.size(); }
  bool contains(NodeId v) const { return in_set_[v]; }
  std::span<const NodeId> members() const { return processed_; }

  // Adds x and restores the hull. on_add(v) fires for every new member.
  template <typename OnAdd>
  void insert(NodeId x, OnAdd&& on_add) {
    if (in_set_[x]) return;
    admit(x, on_add);
    while (!pending_.empty()) {
      const NodeId w = pending_.back();
      pending_.pop_back();
      const std::int32_t* to_w = table_.row(w);
      for (NodeId u : processed_) {
        const std::int32_t closer = to_w[u] - 1;
        for (const Incidence& inc : g_.incident(u)) {
          if (!in_set_[inc.node] && to_w[inc.node] == closer) admit(inc.node, on_add);
        }
      }
      processed_.push_back(w);
    }
  }

 private:
  template <typename OnAdd>
  void admit(NodeId v, OnAdd& on_add) {
    in_set_[v] = true;
    pending_.push_back(v);
    on_add(v);
  }

  const Graph& g_;
  DistanceTable& table_;
  std::vector<bool> in_set_;
  std::vector<NodeId> processed_;
  std::vector<NodeId> pending_;
};

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw PreconditionError(std::string(what) + " requires a connected graph");
  }
}

std::vector<NodeId> hull_of(const Graph& g, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw PreconditionError("convex hull of an empty node set");
  for (NodeId v : seeds) {
    if (v >= g.node_count()) throw InvalidInput("node id " + std::to_string(v) + " out of range");
  }
  require_connected(g, "convex hull");
  DistanceTable table(g);
  HullBuilder hull(g, table);
  for (NodeId v : seeds) hull.insert(v, [](NodeId) {});
  std::vector<NodeId> out(hull.members().begin(), hull.members().end());
  std::sort(out.begin(), out.end());
  return out;
}

// Tracks how many edges join each outside node to S, so that a uniform cut
// edge can be drawn in O(n) without listing the cut.
class CutSampler {
 public:
  explicit CutSampler(const Graph& g) : g_(g), into_set_(g.node_count(), 0) {}

  void clear() {
    std::fill(into_set_.begin(), into_set_.end(), 0);
    total_ = 0;
    inside_.assign(g_.node_count(), false);
  }

  void on_add(NodeId v) {
    inside_[v] = true;
    total_ -= into_set_[v];
    for (const Incidence& inc : g_.incident(v)) {
      if (!inside_[inc.node]) {
        ++into_set_[inc.node];
        ++total_;
      }
    }
  }

  // Outside endpoint of a uniformly drawn cut edge.
  NodeId draw(Rng& rng) const {
    std::uint64_t r = uniform_index(rng, total_);
    for (NodeId v = 0; v < into_set_.size(); ++v) {
      if (inside_[v]) continue;
      if (r < into_set_[v]) return v;
      r -= into_set_[v];
    }
    throw Error("cut sampler out of sync");
  }

 private:
  const Graph& g_;
  std::vector<std::uint64_t> into_set_;
  std::vector<bool> inside_;
  std::uint64_t total_ = 0;
};

class ExpansionRunner {
 public:
  ExpansionRunner(const Graph& g, DistanceTable& table)
      : g_(g), hull_(g, table), cut_(g) {}

  std::vector<std::size_t> run(Rng& rng) {
    const std::size_t n = g_.node_count();
    std::vector<std::size_t> sizes;
    sizes.reserve(n);
    hull_.clear();
    cut_.clear();
    auto track = [this](NodeId v) { cut_.on_add(v); };
    hull_.insert(static_cast<NodeId>(uniform_index(rng, n)), track);
    sizes.push_back(hull_.size());
    while (sizes.size() < n) {
      if (hull_.size() < n) hull_.insert(cut_.draw(rng), track);
      sizes.push_back(hull_.size());
    }
    return sizes;
  }

 private:
  const Graph& g_;
  HullBuilder hull_;
  CutSampler cut_;
};

}  // namespace

std::vector<NodeId> convex_hull(const Graph& g, std::span<const NodeId> seeds) {
  return hull_of(g, seeds);
}

bool is_convex(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return hull_of(g, sorted) == sorted;
}

std::vector<std::size_t> expansion_run(const Graph& g, Rng& rng) {
  if (g.node_count() == 0) throw PreconditionError("expansion on an empty graph");
  require_connected(g, "convex expansion");
  DistanceTable table(g);
  ExpansionRunner runner(g, table);
  return runner.run(rng);
}

double convexity_measure(const ExpansionProfile& profile) {
  const std::uint64_t runs = profile.runs;
  const std::uint64_t n = profile.n;
  if (runs == 0 || n == 0 || profile.totals.size() != n) {
    throw InvalidInput("malformed expansion profile");
  }
  // s(t) - s(t-1) - 1/n = (totals[t] - totals[t-1] - runs) / (runs * n).
  std::uint64_t excess = 0;
  for (std::size_t t = 1; t < n; ++t) {
    const std::uint64_t step = profile.totals[t] - profile.totals[t - 1];
    if (step > runs) excess += step - runs;
  }
  const std::uint64_t scale = runs * n;
  return static_cast<double>(scale - excess) / static_cast<double>(scale);
}

ConvexityScore convexity(const Graph& g, const ConvexityOptions& options) {
  const std::size_t n = g.node_count();
  if (n < 2) throw PreconditionError("convexity requires at least two nodes");
  if (options.runs == 0) throw InvalidInput("convexity requires at least one run");
  require_connected(g, "convexity");

  DistanceTable table(g);
  table.fill();

  std::vector<std::vector<std::size_t>> per_run(options.runs);
  unsigned workers = options.threads ? options.threads : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, options.runs));

  auto work = [&](unsigned worker) {
    ExpansionRunner runner(g, table);
    for (std::size_t r = worker; r < options.runs; r += workers) {
      Rng rng = make_stream(options.seed, r);
      per_run[r] = runner.run(rng);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  ConvexityScore score;
  score.seed = options.seed;
  ExpansionProfile& p = score.profile;
  p.n = n;
  p.runs = options.runs;
  p.totals.assign(n, 0);
  for (const auto& sizes : per_run) {
    for (std::size_t t = 0; t < n; ++t) p.totals[t] += sizes[t];
  }
  p.s.resize(n);
  const double scale = static_cast<double>(options.runs) * static_cast<double>(n);
  for (std::size_t t = 0; t < n; ++t) p.s[t] = static_cast<double>(p.totals[t]) / scale;
  score.x = convexity_measure(p);
  return score;
}

bool is_tree_of_cliques(const Graph& g) {
  require_connected(g, "tree-of-cliques test");
  std::vector<NodeId> nodes;
  for (const EdgeSubset& block : biconnected_components(g)) {
    nodes.clear();
    for (EdgeId e : block) {
      nodes.push_back(g.edge(e).u);
      nodes.push_back(g.edge(e).v);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    const std::size_t k = nodes.size();
    if (block.size() != k * (k - 1) / 2) return false;
  }
  return true;
}

}  // namespace convexa
