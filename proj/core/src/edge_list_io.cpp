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

#include "convexa/edge_list_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "convexa/error.hpp"
#include "csv.hpp"

namespace convexa {
namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    fields.emplace_back(detail::trim(line.substr(start, tab - start)));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

// Calls `row(fields, line_number)` for every data line.
template <typename RowFn>
void for_each_row(std::istream& in, RowFn&& row) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view view = detail::trim(line);
    if (view.empty() || view.front() == '#') continue;
    row(split_tabs(line), number);
  }
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in, std::string_view source) {
  EdgeListData data;
  for_each_row(in, [&](const std::vector<std::string>& f, std::size_t line) {
    if (f[0].empty()) throw InvalidInput(where(source, line) + ": empty node identifier");
    if (f.size() == 1) {
      data.isolated.push_back(f[0]);
      return;
    }
    EdgeRecord rec{f[0], f[1], std::nullopt};
    if (f.size() >= 3 && !f[2].empty()) {
      rec.weight = detail::parse_double(f[2]);
      if (!rec.weight) {
        throw InvalidInput(where(source, line) + ": bad weight '" + f[2] + "'");
      }
      if (!(std::isfinite(*rec.weight) && *rec.weight > 0.0)) {
        throw InvalidInput(where(source, line) + " (" + f[0] + ", " + f[1] +
                           "): weight must be positive, got " + f[2]);
      }
    }
    data.records.push_back(std::move(rec));
  });
  return data;
}

GraphBuild read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  const EdgeListData data = parse_edge_list(in, path.string());
  return build_graph(data.records, data.isolated);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << g.name(ed.u) << '\t' << g.name(ed.v) << '\t' << format_number(g.weight(e)) << '\n';
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << g.name(v) << '\n';
  }
}

void write_flagged_edge_list(std::ostream& out, const Graph& g,
                             std::span<const EdgeId> subset,
                             std::string_view flag_column) {
  std::vector<bool> flag(g.edge_count(), false);
  for (EdgeId e : subset) {
    if (e >= g.edge_count()) throw InvalidInput("edge id out of range");
    flag[e] = true;
  }
  out << "# u\tv\tweight\t" << flag_column << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    out << g.name(ed.u) << '\t' << g.name(ed.v) << '\t' << format_number(g.weight(e))
        << '\t' << (flag[e] ? 1 : 0) << '\n';
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << g.name(v) << '\n';
  }
}

FlaggedEdgeList read_flagged_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  EdgeListData data;
  std::vector<std::pair<std::string, std::string>> flagged_pairs;
  const std::string source = path.string();
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  {
    std::istringstream copy(body);
    data = parse_edge_list(copy, source);
  }
  std::istringstream again(body);
  for_each_row(again, [&](const std::vector<std::string>& f, std::size_t line) {
    if (f.size() < 4) return;
    if (f[3] == "1") {
      flagged_pairs.emplace_back(f[0], f[1]);
    } else if (f[3] != "0") {
      throw InvalidInput(where(source, line) + ": flag must be 0 or 1, got '" + f[3] + "'");
    }
  });
  FlaggedEdgeList out;
  out.graph = build_graph(data.records, data.isolated).graph;
  for (const auto& [a, b] : flagged_pairs) {
    const NodeId u = out.graph.node(a);
    const NodeId v = out.graph.node(b);
    if (u != v) out.flagged.push_back(out.graph.edge_id(u, v));
  }
  std::sort(out.flagged.begin(), out.flagged.end());
  out.flagged.erase(std::unique(out.flagged.begin(), out.flagged.end()), out.flagged.end());
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "NA";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "NA";
  return std::string(buf.data(), end);
}

}  // namespace convexa
