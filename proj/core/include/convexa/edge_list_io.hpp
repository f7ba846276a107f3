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

#ifndef CONVEXA_EDGE_LIST_IO_HPP_
#define CONVEXA_EDGE_LIST_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convexa/graph.hpp"

namespace convexa {

// Edge-list TSV: `u<TAB>v[<TAB>weight]` per line, `#` lines are comments.
// A line holding a single field declares an isolated node. Columns after
// the weight are ignored by parse_edge_list().
struct EdgeListData {
  std::vector<EdgeRecord> records;
  std::vector<std::string> isolated;
};

EdgeListData parse_edge_list(std::istream& in, std::string_view source = "<input>");

// Throws IoError when the file cannot be opened.
GraphBuild read_edge_list(const std::filesystem::path& path);

// Writes every edge, then every isolated node, in id order.
void write_edge_list(std::ostream& out, const Graph& g);

// `u<TAB>v<TAB>weight<TAB>flag` for every edge of g, flag = 1 for members of
// `subset`. The header is a comment so the file stays a valid edge list.
void write_flagged_edge_list(std::ostream& out, const Graph& g,
                             std::span<const EdgeId> subset,
                             std::string_view flag_column);

struct FlaggedEdgeList {
  Graph graph;
  EdgeSubset flagged;
};

// Reads the output of write_flagged_edge_list(). Lines without a fourth
// column count as unflagged.
FlaggedEdgeList read_flagged_edge_list(const std::filesystem::path& path);

// Shortest decimal text that round-trips to the same double; "NA" for NaN.
std::string format_number(double x);

}  // namespace convexa

#endif  // CONVEXA_EDGE_LIST_IO_HPP_
