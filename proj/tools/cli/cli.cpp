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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "convexa/convexa.hpp"
#include "output.hpp"

namespace convexa::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string input;
  std::optional<std::string> output;
  std::optional<std::string> output_dir;
  std::optional<std::string> profile;
  std::string format = "csv";
  std::uint64_t seed = kDefaultSeed;
  std::size_t runs = 100;
  unsigned threads = 0;
  std::string objective = "global";
  std::string tie_break = "lex";
  std::string clustering = "local";

  std::string backbone_kind;
  std::optional<std::size_t> backbone_edges;
  std::vector<std::string> backbone_kinds{"spanning_tree", "betweenness_edges", "embeddedness_edges",
                                          "convex_skeleton"};

  std::vector<std::string> measures{"degree", "pagerank", "betweenness", "closeness"};
  std::string measure;
  std::size_t top = 20;
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;

  std::string papers;
  std::optional<std::string> metadata;
  std::string scheme = "full";
  std::optional<int> year_min;
  std::optional<int> year_max;

  std::optional<std::string> skeleton;
  std::optional<std::string> authors;
  std::optional<std::string> expr;
  std::optional<std::string> paper_attr;
  std::optional<double> bin_width;
  double bin_origin = 0.0;

  std::string generator;
  GeneratorSpec spec;
};

struct Context {
  const Options& opt;
  RunMeta meta;
  std::ostream& out;
  std::ostream& err;
};

bool json_format(const Options& o) { return o.format == "json"; }

std::optional<fs::path> out_path(const Options& o) {
  if (!o.output || *o.output == "-") return std::nullopt;
  return fs::path(*o.output);
}

fs::path output_dir(const Options& o) {
  const fs::path dir(*o.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
  return dir;
}

Graph load_graph(const std::string& path, Context& ctx) {
  GraphBuild built = read_edge_list(path);
  if (built.dropped_self_loops > 0) {
    ctx.err << "convexa: warning: dropped " << built.dropped_self_loops << " self-loop(s) from "
            << path << "\n";
    ctx.meta.notes["dropped_self_loops"] = built.dropped_self_loops;
  }
  return std::move(built.graph);
}

TieRule tie_rule(const Options& o) {
  return {o.tie_break == "random" ? TieBreak::kRandom : TieBreak::kLexSmallest, o.seed};
}

SkeletonOptions skeleton_options(const Options& o) {
  return {*parse_objective(o.objective), tie_rule(o)};
}

StatsOptions stats_options(const Options& o) {
  StatsOptions s;
  s.convexity_runs = o.runs;
  s.seed = o.seed;
  s.clustering = *parse_objective(o.clustering);
  s.threads = o.threads;
  return s;
}

PageRankOptions pagerank_options(const Options& o) { return {o.damping, o.tolerance, o.max_iterations}; }

// Statistic rows in table order.
std::vector<std::pair<std::string, std::optional<double>>> stat_rows(const StatsRecord& s) {
  return {{"nodes", static_cast<double>(s.nodes)},
          {"edges", static_cast<double>(s.edges)},
          {"pct_lcc", s.pct_lcc},
          {"mean_degree", s.mean_degree},
          {"mean_distance", s.mean_distance},
          {"assortativity", s.assortativity},
          {"clustering", s.clustering},
          {"convexity", s.convexity}};
}

Json stats_json(const StatsRecord& s) {
  Json j = Json::object();
  for (const auto& [name, value] : stat_rows(s)) {
    j[name] = value ? Json(*value) : Json(nullptr);
  }
  return j;
}

std::string write_tsv(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

std::string write_flagged(const Graph& g, std::span<const EdgeId> subset, std::string_view flag) {
  std::ostringstream os;
  write_flagged_edge_list(os, g, subset, flag);
  return os.str();
}

Backbone make_backbone(const Graph& g, BackboneKind kind, std::size_t m, const Options& o) {
  switch (kind) {
    case BackboneKind::kMaxSpanningTree:
      return maximum_spanning_tree(g, tie_rule(o));
    case BackboneKind::kHighBetweenness:
      return top_m_edge_backbone(g, edge_betweenness(g), m, kind, tie_rule(o));
    case BackboneKind::kHighEmbeddedness:
      return top_m_edge_backbone(g, embeddedness_scores(g), m, kind, tie_rule(o));
    case BackboneKind::kConvexSkeleton:
      break;
  }
  return skeleton_backbone(extract_convex_skeleton(g, skeleton_options(o)));
}

void cmd_convexity(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  ConvexityOptions co;
  co.runs = o.runs;
  co.seed = o.seed;
  co.threads = o.threads;
  const ConvexityScore score = convexity(g, co);

  std::string text;
  if (json_format(o)) {
    Json j;
    j["x"] = score.x;
    j["runs"] = score.profile.runs;
    j["seed"] = score.seed;
    j["nodes"] = score.profile.n;
    j["profile"] = score.profile.s;
    text = j.dump(2) + "\n";
  } else {
    text = "x,runs,seed,nodes\n" + num(score.x) + "," + std::to_string(score.profile.runs) + "," +
           std::to_string(score.seed) + "," + std::to_string(score.profile.n) + "\n";
  }
  emit(out_path(o), text, ctx.meta, ctx.out);

  if (o.profile) {
    std::string csv = "t,s_t\n";
    for (std::size_t t = 0; t < score.profile.s.size(); ++t) {
      csv += std::to_string(t) + "," + num(score.profile.s[t]) + "\n";
    }
    emit(fs::path(*o.profile), csv, ctx.meta, ctx.out);
  }
}

void cmd_skeleton(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  const fs::path dir = output_dir(o);
  const SkeletonResult sk = extract_convex_skeleton(g, skeleton_options(o));
  const RetainedFraction kept = retained_weight_fraction(g, sk);
  const StatsRecord stats = descriptive_stats(skeleton_graph(g, sk), stats_options(o));

  emit(dir / "skeleton.tsv", write_flagged(g, sk.kept, "in_skeleton"), ctx.meta, ctx.out);

  if (json_format(o)) {
    Json j;
    j["objective"] = to_string(sk.objective);
    j["kept_edges"] = sk.kept.size();
    j["removed_edges"] = sk.removed.size();
    j["edge_fraction"] = kept.edges;
    j["weight_fraction"] = kept.weight;
    j["stats"] = stats_json(stats);
    Json log = Json::array();
    for (const RemovalStep& step : sk.removed) {
      const Edge& e = g.edge(step.edge);
      log.push_back({{"u", g.name(e.u)}, {"v", g.name(e.v)}, {"weight", g.weight(step.edge)},
                     {"objective", step.objective}});
    }
    j["removals"] = std::move(log);
    emit(dir / "skeleton.json", j.dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }

  std::string log = "step,u,v,weight,objective\n";
  for (std::size_t i = 0; i < sk.removed.size(); ++i) {
    const Edge& e = g.edge(sk.removed[i].edge);
    log += std::to_string(i + 1) + "," + csv_field(g.name(e.u)) + "," + csv_field(g.name(e.v)) + "," +
           num(g.weight(sk.removed[i].edge)) + "," + num(sk.removed[i].objective) + "\n";
  }
  emit(dir / "removals.csv", log, ctx.meta, ctx.out);

  std::string summary = "statistic,value\n";
  summary += "objective," + std::string(to_string(sk.objective)) + "\n";
  summary += "kept_edges," + std::to_string(sk.kept.size()) + "\n";
  summary += "removed_edges," + std::to_string(sk.removed.size()) + "\n";
  summary += "edge_fraction," + num(kept.edges) + "\n";
  summary += "weight_fraction," + num(kept.weight) + "\n";
  for (const auto& [name, value] : stat_rows(stats)) summary += name + "," + num(value) + "\n";
  emit(dir / "summary.csv", summary, ctx.meta, ctx.out);
}

void cmd_backbone(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  const BackboneKind kind = *parse_backbone_kind(o.backbone_kind);
  std::size_t m = 0;
  if (kind == BackboneKind::kHighBetweenness || kind == BackboneKind::kHighEmbeddedness) {
    if (o.backbone_edges) {
      m = *o.backbone_edges;
    } else {
      // Same size as the convex skeleton.
      m = extract_convex_skeleton(g, skeleton_options(o)).kept.size();
    }
    ctx.meta.notes["edges"] = m;
  }
  const Backbone b = make_backbone(g, kind, m, o);
  if (json_format(o)) {
    Json j;
    j["kind"] = to_string(b.kind);
    Json edges = Json::array();
    for (EdgeId e : b.edges) {
      edges.push_back({g.name(g.edge(e).u), g.name(g.edge(e).v), g.weight(e)});
    }
    j["edges"] = std::move(edges);
    emit(out_path(o), j.dump(2) + "\n", ctx.meta, ctx.out);
  } else {
    emit(out_path(o), write_flagged(g, b.edges, "in_backbone"), ctx.meta, ctx.out);
  }
}

std::vector<CentralityVector> all_centralities(const Graph& g, const Options& o) {
  std::vector<CentralityVector> out;
  for (Measure m : kAllMeasures) out.push_back(compute_centrality(g, m, pagerank_options(o)));
  return out;
}

void cmd_compare(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  const fs::path dir = output_dir(o);
  const StatsOptions so = stats_options(o);

  std::vector<BackboneKind> kinds;
  for (const std::string& k : o.backbone_kinds) {
    const BackboneKind kind = *parse_backbone_kind(k);
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) kinds.push_back(kind);
  }

  // The skeleton fixes the size of the top-m backbones.
  const SkeletonResult sk = extract_convex_skeleton(g, skeleton_options(o));
  const std::size_t m = sk.kept.size();

  std::vector<std::pair<std::string, StatsRecord>> columns;
  columns.emplace_back("network", descriptive_stats(g, so));
  const auto network_centrality = all_centralities(g, o);
  std::vector<std::pair<BackboneKind, CorrelationMatrix>> grids;
  for (BackboneKind kind : kinds) {
    const Backbone b = kind == BackboneKind::kConvexSkeleton ? skeleton_backbone(sk)
                                                              : make_backbone(g, kind, m, o);
    const Graph sub = g.edge_subgraph(b.edges);
    columns.emplace_back(std::string(to_string(kind)), descriptive_stats(sub, so));
    grids.emplace_back(kind, correlation_matrix(network_centrality, all_centralities(sub, o)));
  }

  auto cell_value = [](const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); };
  if (json_format(o)) {
    Json j;
    Json stats = Json::object();
    for (const auto& [name, record] : columns) stats[name] = stats_json(record);
    j["stats"] = std::move(stats);
    Json corr = Json::object();
    for (const auto& [kind, grid] : grids) {
      Json cells = Json::array();
      for (const auto& row : grid) {
        for (const CorrelationCell& c : row) {
          cells.push_back({{"row_measure", to_string(c.row)}, {"col_measure", to_string(c.col)},
                           {"rho", cell_value(c.rho)}, {"tau", cell_value(c.tau)}});
        }
      }
      corr[std::string(to_string(kind))] = std::move(cells);
    }
    j["correlations"] = std::move(corr);
    emit(dir / "compare.json", j.dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }

  std::string table = "statistic";
  for (const auto& col : columns) table += "," + col.first;
  table += "\n";
  const std::size_t rows = stat_rows(columns.front().second).size();
  for (std::size_t r = 0; r < rows; ++r) {
    table += stat_rows(columns.front().second)[r].first;
    for (const auto& col : columns) table += "," + num(stat_rows(col.second)[r].second);
    table += "\n";
  }
  emit(dir / "stats.csv", table, ctx.meta, ctx.out);

  for (const auto& [kind, grid] : grids) {
    std::string csv = "row_measure,col_measure,rho,tau\n";
    for (const auto& row : grid) {
      for (const CorrelationCell& c : row) {
        csv += std::string(to_string(c.row)) + "," + std::string(to_string(c.col)) + "," + num(c.rho) +
               "," + num(c.tau) + "\n";
      }
    }
    emit(dir / ("correlations_" + std::string(to_string(kind)) + ".csv"), csv, ctx.meta, ctx.out);
  }
}

void cmd_centrality(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  std::vector<CentralityVector> vectors;
  for (const std::string& name : o.measures) {
    vectors.push_back(compute_centrality(g, *parse_measure(name), pagerank_options(o)));
  }
  if (json_format(o)) {
    Json j = Json::array();
    for (NodeId v = 0; v < g.node_count(); ++v) {
      Json row;
      row["node"] = g.name(v);
      for (const auto& cv : vectors) row[std::string(to_string(cv.measure))] = cv.values[v];
      j.push_back(std::move(row));
    }
    emit(out_path(o), j.dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }
  std::string csv = "node";
  for (const auto& cv : vectors) csv += "," + std::string(to_string(cv.measure));
  csv += "\n";
  for (NodeId v = 0; v < g.node_count(); ++v) {
    csv += csv_field(g.name(v));
    for (const auto& cv : vectors) csv += "," + num(cv.values[v]);
    csv += "\n";
  }
  emit(out_path(o), csv, ctx.meta, ctx.out);
}

void cmd_rank(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  const CentralityVector cv = compute_centrality(g, *parse_measure(o.measure), pagerank_options(o));
  const auto ranked = top_k(cv, o.top);
  if (json_format(o)) {
    Json j = Json::array();
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      j.push_back({{"rank", i + 1}, {"node", g.name(ranked[i].node)}, {"value", ranked[i].value}});
    }
    emit(out_path(o), j.dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }
  std::string csv = "rank,node,value\n";
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    csv += std::to_string(i + 1) + "," + csv_field(g.name(ranked[i].node)) + "," + num(ranked[i].value) +
           "\n";
  }
  emit(out_path(o), csv, ctx.meta, ctx.out);
}

std::vector<PaperRecord> load_filtered_papers(const Options& o) {
  std::optional<fs::path> meta;
  if (o.metadata) meta = fs::path(*o.metadata);
  auto papers = load_papers(o.papers, meta);
  if (o.year_min || o.year_max) papers = filter_by_year(papers, o.year_min, o.year_max);
  return papers;
}

void cmd_buildnet(Context& ctx) {
  const Options& o = ctx.opt;
  const auto papers = load_filtered_papers(o);
  const Graph g = build_coauthorship(papers, *parse_scheme(o.scheme));
  ctx.meta.notes["papers"] = papers.size();
  emit(out_path(o), write_tsv(g), ctx.meta, ctx.out);
}

void cmd_distributions(Context& ctx) {
  const Options& o = ctx.opt;
  if (o.expr.has_value() == o.paper_attr.has_value()) {
    throw InvalidInput("distributions needs exactly one of --expr or --paper-attr");
  }
  if (o.paper_attr && o.papers.empty()) throw InvalidInput("--paper-attr needs --papers");
  const Graph g = load_graph(o.input, ctx);

  EdgeSubset skeleton_edges;
  if (o.skeleton) {
    const FlaggedEdgeList flagged = read_flagged_edge_list(*o.skeleton);
    const Graph& h = flagged.graph;
    bool same = h.node_count() == g.node_count() && h.edge_count() == g.edge_count();
    for (NodeId v = 0; same && v < g.node_count(); ++v) same = h.name(v) == g.name(v);
    for (EdgeId e = 0; same && e < g.edge_count(); ++e) same = h.edge(e) == g.edge(e);
    if (!same) throw InvalidInput(*o.skeleton + " does not describe the edges of " + o.input);
    skeleton_edges = flagged.flagged;
  } else {
    skeleton_edges = extract_convex_skeleton(g, skeleton_options(o)).kept;
  }

  std::vector<PaperRecord> papers;
  if (!o.papers.empty()) papers = load_filtered_papers(o);
  const Binning binning =
      o.bin_width ? Binning::fixed_width(*o.bin_width, o.bin_origin) : Binning::categorical();

  DistributionReport report;
  if (o.expr) {
    AuthorTable table = o.authors ? load_author_table(*o.authors) : AuthorTable{};
    add_derived_author_attributes(table, papers);
    report = distribution_report(g, skeleton_edges, AttributeExpr::parse(*o.expr), table, binning);
  } else {
    report = paper_distribution_report(g, skeleton_edges, papers, *parse_scheme(o.scheme), *o.paper_attr,
                                       binning);
  }

  const bool fixed = binning.kind == Binning::Kind::kFixedWidth;
  if (json_format(o)) {
    Json j;
    j["attribute"] = report.attribute;
    Json bins = Json::array();
    for (const auto& b : report.bins) {
      Json row;
      if (fixed) {
        row["bin_low"] = b.low;
        row["bin_high"] = b.high;
      } else {
        row["category"] = b.category;
      }
      row["skeleton_weight"] = b.skeleton_weight;
      row["remainder_weight"] = b.remainder_weight;
      bins.push_back(std::move(row));
    }
    j["bins"] = std::move(bins);
    j["missing"] = {{"skeleton_weight", report.missing_skeleton},
                    {"remainder_weight", report.missing_remainder}};
    emit(out_path(o), j.dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }
  std::string csv = fixed ? "bin_low,bin_high,skeleton_weight,remainder_weight\n"
                          : "category,skeleton_weight,remainder_weight\n";
  for (const auto& b : report.bins) {
    csv += fixed ? num(b.low) + "," + num(b.high) : csv_field(b.category);
    csv += "," + num(b.skeleton_weight) + "," + num(b.remainder_weight) + "\n";
  }
  if (report.missing_skeleton > 0.0 || report.missing_remainder > 0.0) {
    csv += fixed ? "MISSING,MISSING" : "MISSING";
    csv += "," + num(report.missing_skeleton) + "," + num(report.missing_remainder) + "\n";
  }
  emit(out_path(o), csv, ctx.meta, ctx.out);
}

void cmd_generate(Context& ctx) {
  const Options& o = ctx.opt;
  GeneratorSpec spec = o.spec;
  spec.kind = *parse_generator_kind(o.generator);
  spec.seed = o.seed;
  const GeneratedGraph gen = generate(spec);
  ctx.meta.notes["rejections"] = gen.rejections;
  if (gen.rejections > 0) {
    ctx.err << "convexa: note: discarded " << gen.rejections << " disconnected sample(s)\n";
  }
  emit(out_path(o), write_tsv(gen.graph), ctx.meta, ctx.out);
}

void cmd_stats(Context& ctx) {
  const Options& o = ctx.opt;
  const Graph g = load_graph(o.input, ctx);
  const StatsRecord s = descriptive_stats(g, stats_options(o));
  if (json_format(o)) {
    emit(out_path(o), stats_json(s).dump(2) + "\n", ctx.meta, ctx.out);
    return;
  }
  std::string csv = "statistic,value\n";
  for (const auto& [name, value] : stat_rows(s)) csv += name + "," + num(value) + "\n";
  emit(out_path(o), csv, ctx.meta, ctx.out);
}

// Records every option of the chosen subcommand, explicit or default.
Json config_of(const CLI::App& sub) {
  Json config = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_lnames().empty()) continue;
    const std::string name = opt->get_lnames().front();
    if (name == "help" || name == "seed") continue;
    if (opt->count() > 0) {
      const auto& results = opt->results();
      config[name] = results.size() == 1 && opt->get_expected_max() <= 1 ? Json(results.front())
                                                                          : Json(results);
    } else {
      const std::string fallback = opt->get_default_str();
      config[name] = fallback.empty() || fallback == "{}" ? Json(nullptr) : Json(fallback);
    }
  }
  return config;
}

using Handler = void (*)(Context&);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph convexity, convex skeletons and network backbones"};
  app.name("convexa");
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  const std::vector<std::string> objectives{"global", "local"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Master random seed")->envname("CONVEXA_SEED");
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", o.threads, "Worker threads for convexity runs (0 = all cores)");
  };
  auto input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Edge-list TSV")->required();
  };
  auto single_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output file (default: stdout)");
  };
  auto multi_output = [&](CLI::App* sub) {
    sub->add_option("--output-dir", o.output_dir, "Directory for the output files")->required();
  };
  auto runs = [&](CLI::App* sub) {
    sub->add_option("--runs", o.runs, "Expansion runs per convexity estimate")->check(CLI::PositiveNumber);
  };
  auto skeleton_flags = [&](CLI::App* sub) {
    sub->add_option("--objective", o.objective, "Clustering objective of the skeleton search")
        ->check(CLI::IsMember(objectives));
    sub->add_option("--tie-break", o.tie_break, "Tie rule for greedy choices")
        ->check(CLI::IsMember({"lex", "random"}));
  };
  auto stats_flags = [&](CLI::App* sub) {
    sub->add_option("--clustering", o.clustering, "Clustering variant reported in statistics")
        ->check(CLI::IsMember(objectives));
  };
  auto pagerank_flags = [&](CLI::App* sub) {
    sub->add_option("--damping", o.damping, "PageRank damping factor")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--tolerance", o.tolerance, "PageRank L1 tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--max-iter", o.max_iterations, "PageRank iteration limit");
  };
  std::vector<std::string> measure_names;
  for (Measure m : kAllMeasures) measure_names.emplace_back(to_string(m));
  std::vector<std::string> backbone_names{"spanning_tree", "betweenness_edges", "embeddedness_edges",
                                          "convex_skeleton", "mst", "betweenness", "embeddedness",
                                          "skeleton"};

  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto* c = app.add_subcommand("convexity", "Estimate the convexity X of a connected graph");
  input(c), single_output(c), runs(c), common(c);
  c->add_option("--profile", o.profile, "Also write the s(t) profile as CSV to this file");
  commands.emplace_back(c, cmd_convexity);

  c = app.add_subcommand("skeleton", "Extract the convex skeleton and its removal log");
  input(c), multi_output(c), skeleton_flags(c), runs(c), stats_flags(c), common(c);
  commands.emplace_back(c, cmd_skeleton);

  c = app.add_subcommand("backbone", "Extract one backbone as a flagged edge list");
  input(c), single_output(c), skeleton_flags(c), common(c);
  c->add_option("--kind", o.backbone_kind, "Backbone kind")->required()->check(CLI::IsMember(backbone_names));
  c->add_option("--edges", o.backbone_edges, "Edges kept by top-m backbones (default: skeleton size)");
  commands.emplace_back(c, cmd_backbone);

  c = app.add_subcommand("compare", "Statistics and rank correlations for the network and its backbones");
  input(c), multi_output(c), skeleton_flags(c), runs(c), stats_flags(c), pagerank_flags(c), common(c);
  c->add_option("--kinds", o.backbone_kinds, "Backbone kinds to compare")
      ->delimiter(',')
      ->check(CLI::IsMember(backbone_names));
  commands.emplace_back(c, cmd_compare);

  c = app.add_subcommand("centrality", "Node centralities");
  input(c), single_output(c), pagerank_flags(c), common(c);
  c->add_option("--measure", o.measures, "Measures to compute")
      ->delimiter(',')
      ->check(CLI::IsMember(measure_names));
  commands.emplace_back(c, cmd_centrality);

  c = app.add_subcommand("rank", "Top nodes under one centrality measure");
  input(c), single_output(c), pagerank_flags(c), common(c);
  c->add_option("--measure", o.measure, "Measure")->required()->check(CLI::IsMember(measure_names));
  c->add_option("--top", o.top, "Rows to keep")->check(CLI::PositiveNumber);
  commands.emplace_back(c, cmd_rank);

  auto paper_flags = [&](CLI::App* sub, bool required) {
    auto* p = sub->add_option("--papers", o.papers, "Authorship CSV (paper_id,author_id)");
    if (required) p->required();
    sub->add_option("--metadata", o.metadata, "Paper metadata CSV (paper_id,year,...)");
    sub->add_option("--scheme", o.scheme, "Counting scheme")
        ->check(CLI::IsMember({"full", "fractional", "partial"}));
    sub->add_option("--year-min", o.year_min, "Drop papers published before this year");
    sub->add_option("--year-max", o.year_max, "Drop papers published after this year");
  };

  c = app.add_subcommand("buildnet", "Build a weighted co-authorship network");
  single_output(c), common(c);
  paper_flags(c, true);
  commands.emplace_back(c, cmd_buildnet);

  c = app.add_subcommand("distributions", "Attribute distributions over skeleton and remainder edges");
  input(c), single_output(c), skeleton_flags(c), common(c);
  paper_flags(c, false);
  c->add_option("--skeleton", o.skeleton, "Skeleton TSV from the skeleton command");
  c->add_option("--authors", o.authors, "Author attribute CSV");
  c->add_option("--expr", o.expr, "Edge attribute, e.g. ABS_DIFF(academic_birth_year)");
  c->add_option("--paper-attr", o.paper_attr, "Paper attribute binned per co-authorship");
  c->add_option("--bin-width", o.bin_width, "Fixed bin width (default: categorical bins)")
      ->check(CLI::PositiveNumber);
  c->add_option("--bin-origin", o.bin_origin, "Left edge of bin 0");
  commands.emplace_back(c, cmd_distributions);

  std::vector<std::string> generator_names;
  for (GeneratorKind k : {GeneratorKind::kErRandom, GeneratorKind::kTreeOfCliques,
                          GeneratorKind::kTriangularLattice, GeneratorKind::kPath, GeneratorKind::kCycle,
                          GeneratorKind::kComplete, GeneratorKind::kStar, GeneratorKind::kClustered}) {
    generator_names.emplace_back(to_string(k));
  }
  c = app.add_subcommand("generate", "Generate a synthetic graph");
  single_output(c), common(c);
  c->add_option("--kind", o.generator, "Generator")->required()->check(CLI::IsMember(generator_names));
  c->add_option("-n,--nodes", o.spec.n, "Node count");
  c->add_option("-p,--prob", o.spec.p, "Edge probability");
  c->add_flag("--connected", o.spec.connected, "Resample ER graphs until connected");
  c->add_option("--cliques", o.spec.cliques, "Clique count");
  c->add_option("--min-clique", o.spec.min_clique, "Smallest clique size");
  c->add_option("--max-clique", o.spec.max_clique, "Largest clique size");
  c->add_option("--clique-sizes", o.spec.clique_sizes, "Explicit clique sizes")->delimiter(',');
  c->add_option("--rows", o.spec.rows, "Lattice rows");
  c->add_option("--cols", o.spec.cols, "Lattice columns");
  c->add_option("--edges", o.spec.edges, "Target edge count for clustered graphs");
  c->add_option("--max-attempts", o.spec.max_attempts, "ER resampling limit");
  commands.emplace_back(c, cmd_generate);

  c = app.add_subcommand("stats", "Descriptive statistics");
  input(c), single_output(c), runs(c), stats_flags(c), common(c);
  commands.emplace_back(c, cmd_stats);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto& [sub, handler] : commands) {
      if (!sub->parsed()) continue;
      Context ctx{o, RunMeta{sub->get_name(), config_of(*sub), o.seed, Json::object()}, out, err};
      handler(ctx);
    }
  } catch (const NumericalError& e) {
    err << "convexa: numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitNumerical;
  } catch (const PreconditionError& e) {
    err << "convexa: error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const IoError& e) {
    err << "convexa: error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InvalidInput& e) {
    err << "convexa: error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "convexa: internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace convexa::cli
