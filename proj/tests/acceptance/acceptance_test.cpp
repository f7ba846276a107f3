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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "convexa/convexa.hpp"
#include "support/oracles.hpp"
#include "support/test_graphs.hpp"

namespace convexa {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failure messages of one criterion.
struct Check {
  std::size_t failures = 0;
  std::size_t checks = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  bool ok() const { return failures == 0; }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

Graph random_tree(std::mt19937_64& gen, std::size_t n) { return testing::random_connected(gen, n, 0.0); }

// Criterion 1.
Check exact_convexity() {
  Check c;
  std::mt19937_64 gen(1);
  auto timed = [&](const Graph& g, std::uint64_t seed, const std::string& label) {
    const auto start = Clock::now();
    ConvexityOptions opt;
    opt.seed = seed;
    const double x = convexity(g, opt).x;
    const double t = seconds_since(start);
    c.expect(t < 1.0, label + " took " + fmt(t) + " s");
    return x;
  };
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::uint64_t seed : {1ull, 17ull, 123456789ull}) {
      const double tree = timed(random_tree(gen, n), seed, "tree n=" + std::to_string(n));
      c.expect(tree == 1.0, "X(tree n=" + std::to_string(n) + ") = " + fmt(tree));
      const double clique = timed(testing::complete_graph(n), seed, "K" + std::to_string(n));
      c.expect(clique == 1.0, "X(K" + std::to_string(n) + ") = " + fmt(clique));
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double x = timed(testing::cycle_graph(4), seed, "C4");
    c.expect(std::abs(x - 0.75) <= 1e-12, "X(C4) = " + fmt(x));
  }
  return c;
}

// Criterion 2.
Check convexity_separation() {
  Check c;
  const auto start = Clock::now();
  GeneratorSpec toc{.kind = GeneratorKind::kTreeOfCliques, .cliques = 100, .min_clique = 2, .max_clique = 4,
                    .seed = 2};
  const Graph tree = generate(toc).graph;
  c.expect(tree.node_count() >= 180 && tree.node_count() <= 220,
           "tree of cliques has " + std::to_string(tree.node_count()) + " nodes");
  const double x_tree = convexity(tree, {.runs = 100, .seed = 1}).x;
  c.expect(x_tree >= 0.99, "X(tree of cliques) = " + fmt(x_tree));
  double worst = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorSpec er{.kind = GeneratorKind::kErRandom, .n = 100, .p = 0.1, .connected = true, .seed = seed};
    const double x = convexity(generate(er).graph, {.runs = 100, .seed = seed}).x;
    worst = std::max(worst, x);
    c.expect(x <= 0.20, "X(ER seed " + std::to_string(seed) + ") = " + fmt(x));
  }
  const double t = seconds_since(start);
  c.expect(t < 60.0, "took " + fmt(t) + " s");
  c.notes.insert(c.notes.begin(), "X(tree of cliques)=" + fmt(x_tree) + ", max X(ER)=" + fmt(worst));
  return c;
}

// Criterion 3.
Check skeleton_contract() {
  Check c;
  const auto start = Clock::now();
  std::mt19937_64 gen(3);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 5 + gen() % 56;
    const double p = std::uniform_real_distribution<double>(0.02, 0.3)(gen);
    const Graph g = testing::random_connected(gen, n, p);
    const SkeletonResult sk = extract_convex_skeleton(g);
    const Graph s = skeleton_graph(g, sk);
    const std::string tag = "graph " + std::to_string(i) + " (n=" + std::to_string(n) + ")";
    c.expect(s.node_count() == n, tag + ": node set changed");
    c.expect(is_connected(s), tag + ": skeleton disconnected");
    bool cliques = true;
    for (const EdgeSubset& block : biconnected_components(s)) {
      std::vector<NodeId> nodes;
      for (EdgeId e : block) {
        nodes.push_back(s.edge(e).u);
        nodes.push_back(s.edge(e).v);
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      cliques = cliques && block.size() == nodes.size() * (nodes.size() - 1) / 2;
    }
    c.expect(cliques, tag + ": a block is not a clique");
    const double x = convexity(s).x;
    c.expect(x == 1.0, tag + ": skeleton convexity " + fmt(x));
    c.expect(sk.kept.size() >= n - 1 && sk.kept.size() <= g.edge_count(), tag + ": kept size out of range");
  }
  const double t = seconds_since(start);
  c.expect(t < 120.0, "took " + fmt(t) + " s");
  return c;
}

// Criterion 4.
Check table_forced_values() {
  Check c;
  // Same shape as the computer science network: 475 nodes, 1548 edges.
  GeneratorSpec spec{.kind = GeneratorKind::kClustered, .n = 475, .min_clique = 2, .max_clique = 5,
                     .edges = 1548, .seed = 4};
  const Graph g = generate(spec).graph;
  c.expect(g.node_count() == 475 && g.edge_count() == 1548, "fixture shape");
  const Backbone mst = maximum_spanning_tree(g);
  const StatsRecord s = descriptive_stats(g.edge_subgraph(mst.edges));
  c.expect(mst.edges.size() == 474, "MST has " + std::to_string(mst.edges.size()) + " edges");
  c.expect(s.pct_lcc == 100.0, "MST %LCC " + fmt(s.pct_lcc));
  c.expect(s.clustering == 0.0, "MST clustering " + fmt(s.clustering));
  c.expect(s.convexity && *s.convexity == 1.0, "MST convexity");

  std::mt19937_64 gen(40);
  for (int i = 0; i < 20; ++i) {
    const Graph h = testing::random_connected(gen, 10 + gen() % 90, 0.05);
    const Backbone t = maximum_spanning_tree(h);
    const StatsRecord hs = descriptive_stats(h.edge_subgraph(t.edges), {.convexity_runs = 20});
    c.expect(t.edges.size() == h.node_count() - 1 && hs.clustering == 0.0 && *hs.convexity == 1.0,
             "MST pattern on random graph " + std::to_string(i));
  }

  const SkeletonResult sk = extract_convex_skeleton(g);
  const std::size_t m = sk.kept.size();
  const Backbone bt = top_m_edge_backbone(g, edge_betweenness(g), m, BackboneKind::kHighBetweenness);
  const Backbone em = top_m_edge_backbone(g, embeddedness_scores(g), m, BackboneKind::kHighEmbeddedness);
  c.expect(bt.edges.size() == m, "betweenness backbone size");
  c.expect(em.edges.size() == m, "embeddedness backbone size");
  c.notes.insert(c.notes.begin(), "MST 474 edges, clustering " + fmt(s.clustering) + ", convexity " +
                                      fmt(*s.convexity) + "; m=" + std::to_string(m) + " for all three");
  return c;
}

// Criterion 5.
Check oracle_equivalence() {
  Check c;
  std::mt19937_64 gen(5);
  std::size_t subsets = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + i % 10;
    const Graph g = testing::random_connected(gen, n, 0.1 + 0.4 * double(i % 7) / 6.0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<NodeId> s;
      for (NodeId v = 0; v < n; ++v) {
        if (mask & (1u << v)) s.push_back(v);
      }
      ++subsets;
      c.expect(convex_hull(g, s) == testing::oracle_hull(g, s), "hull mismatch on graph " + std::to_string(i));
      c.expect(is_convex(g, s) == testing::oracle_is_convex(g, s),
               "is_convex mismatch on graph " + std::to_string(i));
    }
  }
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(gen, 1 + i % 12, 0.1 + 0.05 * (i % 10));
    const auto fast = betweenness(g).values;
    const auto slow = testing::oracle_node_betweenness(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      c.expect(std::abs(fast[v] - slow[v]) <= 1e-9, "betweenness mismatch on graph " + std::to_string(i));
    }
  }
  std::uniform_int_distribution<int> w(1, 9);
  for (int i = 0; i < 200; ++i) {
    const Graph shape = testing::random_connected(gen, 2 + i % 7, 0.5);
    std::vector<double> weights(shape.edge_count());
    for (double& x : weights) x = w(gen);
    const Graph g = Graph::from_parts({shape.names().begin(), shape.names().end()},
                                      {shape.edges().begin(), shape.edges().end()}, weights);
    double total = 0.0;
    for (EdgeId e : maximum_spanning_tree(g).edges) total += g.weight(e);
    c.expect(total == testing::oracle_max_spanning_weight(g), "MST weight mismatch on graph " + std::to_string(i));
  }
  c.notes.insert(c.notes.begin(), std::to_string(subsets) + " hull subsets, 200 betweenness, 200 MST graphs");
  return c;
}

// Criterion 6.
Check centrality_exactness() {
  Check c;
  for (double p : pagerank(testing::complete_graph(3)).values) {
    c.expect(std::abs(p - 1.0 / 3.0) <= 1e-4, "K3 PageRank " + fmt(p));
  }
  // Linear system: c = 0.0375 + 0.85 * 3l, l = (1 - c) / 3.
  const double center = 0.8875 / 1.85;
  const double leaf = (1.0 - center) / 3.0;
  const auto star = pagerank(testing::star_graph(3)).values;
  c.expect(std::abs(star[0] - center) <= 1e-4 && std::abs(center - 0.4797) <= 1e-4, "star center " + fmt(star[0]));
  for (int i = 1; i <= 3; ++i) {
    c.expect(std::abs(star[i] - leaf) <= 1e-4 && std::abs(leaf - 0.1734) <= 1e-4, "star leaf " + fmt(star[i]));
  }
  const std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
  c.expect(std::abs(spearman_rho(x, y) - 0.8) <= 1e-12, "rho " + fmt(spearman_rho(x, y)));
  c.expect(std::abs(kendall_tau(x, y) - 2.0 / 3.0) <= 1e-12, "tau " + fmt(kendall_tau(x, y)));
  const Graph k = testing::read_test_graph("karate.tsv");
  const CorrelationMatrix m = correlation_matrix(k, k);
  for (std::size_t i = 0; i < 4; ++i) {
    c.expect(m[i][i].rho && *m[i][i].rho == 1.0 && m[i][i].tau && *m[i][i].tau == 1.0,
             "self-correlation diagonal " + std::string(to_string(kAllMeasures[i])));
  }
  return c;
}

// Criterion 7.
Check counting_conservation() {
  Check c;
  std::mt19937_64 gen(7);
  std::vector<PaperRecord> papers;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 1 + gen() % 10;
    std::vector<std::string> pool;
    for (int a = 0; a < 60; ++a) pool.push_back("author" + std::to_string(a));
    std::shuffle(pool.begin(), pool.end(), gen);
    pool.resize(k);
    PaperRecord p{"paper" + std::to_string(i), pool, {{"year", double(1960 + gen() % 51)}}};
    const std::vector<PaperRecord> one{p};
    const double kk = double(k);
    const double expect_full = kk * (kk - 1) / 2;
    const double expect_frac = k >= 2 ? kk / 2 : 0.0;
    const double expect_part = k >= 2 ? (kk - 1) / 2 : 0.0;
    c.expect(std::abs(build_coauthorship(one, CountingScheme::kFull).total_weight() - expect_full) <= 1e-9,
             "full total, k=" + std::to_string(k));
    c.expect(std::abs(build_coauthorship(one, CountingScheme::kFractional).total_weight() - expect_frac) <= 1e-9,
             "fractional total, k=" + std::to_string(k));
    c.expect(std::abs(build_coauthorship(one, CountingScheme::kPartial).total_weight() - expect_part) <= 1e-9,
             "partial total, k=" + std::to_string(k));
    papers.push_back(std::move(p));
  }

  AuthorTable table;
  add_derived_author_attributes(table, papers);
  for (CountingScheme scheme : {CountingScheme::kFull, CountingScheme::kFractional, CountingScheme::kPartial}) {
    const Graph g = build_coauthorship(papers, scheme);
    const Graph lcc = g.induced_subgraph(connected_components(g).front());
    const SkeletonResult sk = extract_convex_skeleton(lcc);
    EdgeSubset all(lcc.edge_count());
    for (EdgeId e = 0; e < lcc.edge_count(); ++e) all[e] = e;
    for (const char* text : {"ABS_DIFF(academic_birth_year)", "MEAN(papers)", "PAIR_MIN(academic_birth_year)"}) {
      const auto expr = AttributeExpr::parse(text);
      const auto split = distribution_report(lcc, sk, expr, table, Binning::fixed_width(5));
      const auto whole = distribution_report(lcc, all, expr, table, Binning::fixed_width(5));
      c.expect(split.bins.size() == whole.bins.size(), std::string(text) + ": bin count");
      for (std::size_t b = 0; b < std::min(split.bins.size(), whole.bins.size()); ++b) {
        const double sum = split.bins[b].skeleton_weight + split.bins[b].remainder_weight;
        c.expect(std::abs(sum - whole.bins[b].skeleton_weight) <= 1e-9, std::string(text) + ": bin mismatch");
      }
      c.expect(std::abs(split.skeleton_total() + split.remainder_total() - lcc.total_weight()) <= 1e-9,
               std::string(text) + ": total weight");
    }
    const auto by_paper = paper_distribution_report(lcc, sk.kept, papers, scheme, "year", Binning::fixed_width(10, 1960));
    c.expect(std::abs(by_paper.skeleton_total() + by_paper.remainder_total() - lcc.total_weight()) <= 1e-9,
             "paper-level report total");
  }
  return c;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Criterion 8.
Check desk_scale(const fs::path& work) {
  Check c;
  const fs::path input = work / "clustered500.tsv";
  CliRun gen = run_cli({"generate", "--kind", "clustered", "-n", "500", "--edges", "2500", "--min-clique", "3",
                        "--max-clique", "6", "--seed", "8", "--output", input.string()});
  c.expect(gen.code == 0, "generate failed: " + gen.err);
  const auto start = Clock::now();
  const CliRun r = run_cli({"compare", "--input", input.string(), "--output-dir", (work / "compare500").string(),
                            "--runs", "100", "--seed", "8"});
  const double t = seconds_since(start);
  c.expect(r.code == 0, "compare failed: " + r.err);
  c.expect(t < 600.0, "took " + fmt(t) + " s");
  c.notes.insert(c.notes.begin(), "compare on 500 nodes / 2500 edges in " + fmt(t) + " s");
  return c;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[fs::relative(entry.path(), dir).string()] = s.str();
  }
  return files;
}

// Criterion 9.
Check determinism(const fs::path& work) {
  Check c;
  const fs::path dir = work / "determinism";
  const std::string d = dir.string();
  std::vector<std::vector<std::string>> commands = {
      {"generate", "--kind", "clustered", "-n", "120", "--edges", "400", "--seed", "9", "--output", d + "/g.tsv"},
      {"generate", "--kind", "er_random", "-n", "60", "-p", "0.1", "--connected", "--seed", "9", "--output",
       d + "/er.tsv"},
      {"convexity", "--input", d + "/g.tsv", "--seed", "3", "--output", d + "/x.csv", "--profile", d + "/s.csv"},
      {"convexity", "--input", d + "/er.tsv", "--seed", "3", "--format", "json", "--output", d + "/x.json"},
      {"skeleton", "--input", d + "/g.tsv", "--output-dir", d + "/sk"},
      {"skeleton", "--input", d + "/er.tsv", "--tie-break", "random", "--seed", "5", "--output-dir", d + "/skr"},
      {"backbone", "--input", d + "/g.tsv", "--kind", "betweenness", "--output", d + "/bb.tsv"},
      {"backbone", "--input", d + "/g.tsv", "--kind", "mst", "--tie-break", "random", "--output", d + "/mst.tsv"},
      {"compare", "--input", d + "/er.tsv", "--output-dir", d + "/cmp", "--runs", "30"},
      {"centrality", "--input", d + "/g.tsv", "--output", d + "/cent.csv"},
      {"rank", "--input", d + "/g.tsv", "--measure", "betweenness", "--output", d + "/rank.csv"},
      {"stats", "--input", d + "/g.tsv", "--output", d + "/stats.csv"},
      {"buildnet", "--papers", d + "/papers.csv", "--metadata", d + "/meta.csv", "--scheme", "fractional",
       "--output", d + "/net.tsv"},
      {"distributions", "--input", d + "/net.tsv", "--papers", d + "/papers.csv", "--metadata", d + "/meta.csv",
       "--expr", "ABS_DIFF(academic_birth_year)", "--bin-width", "5", "--output", d + "/dist.csv"},
  };

  std::vector<std::map<std::string, std::string>> snapshots;
  for (int round = 0; round < 2; ++round) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::mt19937_64 gen(99);
    std::ofstream papers(dir / "papers.csv"), meta(dir / "meta.csv");
    papers << "paper_id,author_id\n";
    meta << "paper_id,year\n";
    for (int p = 0; p < 150; ++p) {
      const std::size_t k = 1 + gen() % 4;
      std::vector<int> authors;
      while (authors.size() < k) {
        const int a = int(gen() % 40);
        if (std::find(authors.begin(), authors.end(), a) == authors.end()) authors.push_back(a);
      }
      for (int a : authors) papers << "p" << p << ",a" << a << "\n";
      meta << "p" << p << "," << 1970 + gen() % 40 << "\n";
    }
    papers.close();
    meta.close();
    for (const auto& cmd : commands) {
      const CliRun r = run_cli(cmd);
      c.expect(r.code == 0, cmd.front() + " failed: " + r.err);
    }
    snapshots.push_back(snapshot(dir));
  }
  c.expect(snapshots[0].size() == snapshots[1].size(), "different file sets");
  for (const auto& [name, bytes] : snapshots[0]) {
    auto it = snapshots[1].find(name);
    c.expect(it != snapshots[1].end() && it->second == bytes, name + " differs between runs");
  }
  c.notes.insert(c.notes.begin(), std::to_string(commands.size()) + " invocations, " +
                                      std::to_string(snapshots[0].size()) + " files compared byte for byte");
  fs::remove_all(dir);
  return c;
}

}  // namespace
}  // namespace convexa

int main() {
  using namespace convexa;
  const fs::path work = fs::temp_directory_path() / "convexa_acceptance";
  fs::remove_all(work);
  fs::create_directories(work);

  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"exact convexity values (trees, cliques, C4)", exact_convexity},
      {"convexity separation (tree of cliques vs ER)", convexity_separation},
      {"skeleton structural contract", skeleton_contract},
      {"table-forced backbone values", table_forced_values},
      {"oracle equivalence (hull, betweenness, MST)", oracle_equivalence},
      {"centrality and correlation exactness", centrality_exactness},
      {"counting-scheme conservation", counting_conservation},
      {"desk-scale compare pipeline", [&] { return desk_scale(work); }},
      {"determinism across subcommands", [&] { return determinism(work); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::cout << "criterion " << i + 1 << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << c.checks << " checks, " << fmt(t) << " s]";
    if (!c.notes.empty()) std::cout << "  " << c.notes.front();
    std::cout << "\n";
    if (!c.ok()) {
      ++failed;
      for (std::size_t n = 1; n < c.notes.size(); ++n) std::cout << "    " << c.notes[n] << "\n";
    }
  }
  fs::remove_all(work);
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
