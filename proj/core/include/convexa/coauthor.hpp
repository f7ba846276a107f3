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

#ifndef CONVEXA_COAUTHOR_HPP_
#define CONVEXA_COAUTHOR_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "convexa/graph.hpp"
#include "convexa/skeleton.hpp"

namespace convexa {

struct Missing {
  friend bool operator==(Missing, Missing) { return true; }
};

// A scalar attribute: missing, numeric, categorical text or boolean.
using AttrValue = std::variant<Missing, double, std::string, bool>;

inline bool is_missing(const AttrValue& v) { return std::holds_alternative<Missing>(v); }

// Empty text is missing, numeric text becomes a double, anything else
// stays a string.
AttrValue parse_attr_value(std::string_view text);
std::string format_attr_value(const AttrValue& v);

struct PaperRecord {
  std::string paper_id;
  std::vector<std::string> authors;
  std::map<std::string, AttrValue> attrs;
};

enum class CountingScheme { kFull, kFractional, kPartial };

std::string_view to_string(CountingScheme scheme);
std::optional<CountingScheme> parse_scheme(std::string_view text);

// Weight each author pair of a k-author paper receives:
// full 1, fractional 1 / (k - 1), partial 1 / k.
double pair_weight(CountingScheme scheme, std::size_t k);

// Weighted co-authorship network. Every author becomes a node, including
// authors of single-author papers only, who stay isolated. Contributions are
// summed per pair grouped by paper size, so the result does not depend on
// the order of `papers`. Throws InvalidInput naming the paper for an empty
// author list or a repeated author.
Graph build_coauthorship(std::span<const PaperRecord> papers, CountingScheme scheme);

// Papers whose numeric `year` lies in [year_min, year_max]. With either bound
// set, undated papers are dropped.
std::vector<PaperRecord> filter_by_year(std::span<const PaperRecord> papers,
                                        std::optional<int> year_min, std::optional<int> year_max);

// Year of the author's earliest dated paper; nullopt when there is none.
std::optional<int> academic_birth_year(std::span<const PaperRecord> papers, std::string_view author);

// Per-author attributes keyed by author id.
class AuthorTable {
 public:
  const std::vector<std::string>& columns() const { return columns_; }
  bool has_column(std::string_view name) const;
  bool has_author(std::string_view author) const;
  std::size_t size() const { return rows_.size(); }

  // Missing for unknown authors; throws InvalidInput for an unknown column.
  const AttrValue& get(std::string_view author, std::string_view column) const;
  void add_column(const std::string& column);
  void set(const std::string& author, const std::string& column, AttrValue value);

 private:
  std::vector<std::string> columns_;
  std::map<std::string, std::map<std::string, AttrValue, std::less<>>, std::less<>> rows_;
};

// Adds `academic_birth_year` and `papers` (paper count) for every author
// seen in `papers`, unless the table already has those columns.
void add_derived_author_attributes(AuthorTable& table, std::span<const PaperRecord> papers);

enum class Derivation { kMean, kAbsDiff, kSame, kPairMin, kPairMax };

// Rule turning two endpoint attributes into one edge attribute, written as
// `MEAN(attr)`, `ABS_DIFF(attr)`, `SAME(attr)`, `PAIR_MIN(attr)` or
// `PAIR_MAX(attr)`.
struct AttributeExpr {
  Derivation op = Derivation::kMean;
  std::string attr;

  static AttributeExpr parse(std::string_view text);
  std::string to_string() const;
};

// Missing when either endpoint value is missing. SAME yields a boolean, the
// other rules need numeric values.
AttrValue edge_attribute(const AttributeExpr& expr, std::string_view u, std::string_view v,
                         const AuthorTable& authors);

struct Binning {
  enum class Kind { kFixedWidth, kCategorical };
  Kind kind = Kind::kCategorical;
  double origin = 0.0;
  double width = 0.0;

  static Binning fixed_width(double width, double origin = 0.0) {
    return {Kind::kFixedWidth, origin, width};
  }
  static Binning categorical() { return {Kind::kCategorical, 0.0, 0.0}; }
};

struct DistributionBin {
  // Set for categorical bins.
  std::string category;
  // [low, high) for fixed-width bins.
  double low = 0.0;
  double high = 0.0;
  double skeleton_weight = 0.0;
  double remainder_weight = 0.0;
};

// Edge weight per attribute bin, split between skeleton and remainder edges.
// Edges whose attribute is missing are collected in the missing totals.
struct DistributionReport {
  std::string attribute;
  Binning binning;
  std::vector<DistributionBin> bins;
  double missing_skeleton = 0.0;
  double missing_remainder = 0.0;

  double skeleton_total() const;
  double remainder_total() const;
};

// Throws InvalidInput for a fixed-width binning without a positive finite
// width, or for non-numeric values under fixed-width binning.
DistributionReport distribution_report(const Graph& g, std::span<const EdgeId> skeleton_edges,
                                       const AttributeExpr& expr, const AuthorTable& authors,
                                       const Binning& binning);
DistributionReport distribution_report(const Graph& g, const SkeletonResult& sk,
                                       const AttributeExpr& expr, const AuthorTable& authors,
                                       const Binning& binning);

// Same split by a paper-level attribute (year, type, ...): each paper's pair
// contributions go to the bin of that paper's value. Pairs that are not
// edges of g are skipped.
DistributionReport paper_distribution_report(const Graph& g, std::span<const EdgeId> skeleton_edges,
                                             std::span<const PaperRecord> papers,
                                             CountingScheme scheme, const std::string& paper_attr,
                                             const Binning& binning);

// `paper_id,author_id` rows (a header row is skipped) plus an optional
// `paper_id,<attr>...` metadata table with a header row. Papers keep the
// order of first appearance, authors the order of their rows.
std::vector<PaperRecord> load_papers(const std::filesystem::path& authorship_csv,
                                     const std::optional<std::filesystem::path>& metadata_csv);

// `author_id,<attr>...` with a header row.
AuthorTable load_author_table(const std::filesystem::path& csv);

}  // namespace convexa

#endif  // CONVEXA_COAUTHOR_HPP_
