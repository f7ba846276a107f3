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

#include "convexa/coauthor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>
#include <unordered_map>

#include "convexa/edge_list_io.hpp"
#include "convexa/error.hpp"
#include "csv.hpp"

namespace convexa {
namespace {

const AttrValue kMissingValue{Missing{}};

void validate(const PaperRecord& paper) {
  if (paper.authors.empty()) {
    throw InvalidInput("paper '" + paper.paper_id + "' has no authors");
  }
  std::vector<std::string> sorted = paper.authors;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw InvalidInput("paper '" + paper.paper_id + "' lists author '" + *dup + "' twice");
  }
}

std::optional<double> numeric(const AttrValue& v) {
  if (const double* d = std::get_if<double>(&v)) return *d;
  return std::nullopt;
}

// Categories sort as booleans, then numbers, then text.
using CategoryKey = std::tuple<int, double, std::string>;

CategoryKey category_key(const AttrValue& v) {
  if (const bool* b = std::get_if<bool>(&v)) return {0, *b ? 1.0 : 0.0, {}};
  if (const double* d = std::get_if<double>(&v)) return {1, *d, {}};
  return {2, 0.0, std::get<std::string>(v)};
}

constexpr std::int64_t kMaxBins = 1'000'000;

class BinAccumulator {
 public:
  explicit BinAccumulator(const Binning& binning) : binning_(binning) {
    if (binning.kind == Binning::Kind::kFixedWidth &&
        !(std::isfinite(binning.width) && binning.width > 0.0 && std::isfinite(binning.origin))) {
      throw InvalidInput("empty binning: bin width must be a positive number");
    }
  }

  void add(const AttrValue& value, double weight, bool in_skeleton) {
    if (is_missing(value)) {
      (in_skeleton ? missing_skeleton_ : missing_remainder_) += weight;
      return;
    }
    std::pair<double, double>* slot = nullptr;
    if (binning_.kind == Binning::Kind::kFixedWidth) {
      const auto x = numeric(value);
      if (!x) {
        throw InvalidInput("fixed-width binning needs numeric values, got '" +
                           format_attr_value(value) + "'");
      }
      const double index = std::floor((*x - binning_.origin) / binning_.width);
      if (!std::isfinite(index) || std::abs(index) > static_cast<double>(kMaxBins)) {
        throw InvalidInput("value " + format_number(*x) + " is too far from the bin origin");
      }
      slot = &numeric_[static_cast<std::int64_t>(index)];
    } else {
      const CategoryKey key = category_key(value);
      labels_.try_emplace(key, format_attr_value(value));
      slot = &categories_[key];
    }
    (in_skeleton ? slot->first : slot->second) += weight;
  }

  DistributionReport finish(std::string attribute) const {
    DistributionReport report;
    report.attribute = std::move(attribute);
    report.binning = binning_;
    report.missing_skeleton = missing_skeleton_;
    report.missing_remainder = missing_remainder_;
    if (binning_.kind == Binning::Kind::kFixedWidth) {
      if (!numeric_.empty()) {
        const std::int64_t first = numeric_.begin()->first;
        const std::int64_t last = numeric_.rbegin()->first;
        if (last - first >= kMaxBins) throw InvalidInput("binning produces too many bins");
        for (std::int64_t i = first; i <= last; ++i) {
          DistributionBin bin;
          bin.low = binning_.origin + static_cast<double>(i) * binning_.width;
          bin.high = binning_.origin + static_cast<double>(i + 1) * binning_.width;
          if (auto it = numeric_.find(i); it != numeric_.end()) {
            bin.skeleton_weight = it->second.first;
            bin.remainder_weight = it->second.second;
          }
          report.bins.push_back(std::move(bin));
        }
      }
    } else {
      for (const auto& [key, weights] : categories_) {
        DistributionBin bin;
        bin.category = labels_.at(key);
        bin.skeleton_weight = weights.first;
        bin.remainder_weight = weights.second;
        report.bins.push_back(std::move(bin));
      }
    }
    return report;
  }

 private:
  Binning binning_;
  std::map<std::int64_t, std::pair<double, double>> numeric_;
  std::map<CategoryKey, std::pair<double, double>> categories_;
  std::map<CategoryKey, std::string> labels_;
  double missing_skeleton_ = 0.0;
  double missing_remainder_ = 0.0;
};

std::vector<bool> skeleton_mask(const Graph& g, std::span<const EdgeId> skeleton_edges) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgeId e : skeleton_edges) {
    if (e >= g.edge_count()) throw InvalidInput("skeleton edge id out of range");
    mask[e] = true;
  }
  return mask;
}

}  // namespace

AttrValue parse_attr_value(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (t.empty()) return Missing{};
  if (t == "true") return true;
  if (t == "false") return false;
  if (auto d = detail::parse_double(t)) return *d;
  return std::string(t);
}

std::string format_attr_value(const AttrValue& v) {
  if (is_missing(v)) return "MISSING";
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const double* d = std::get_if<double>(&v)) return format_number(*d);
  return std::get<std::string>(v);
}

std::string_view to_string(CountingScheme scheme) {
  switch (scheme) {
    case CountingScheme::kFull:
      return "full";
    case CountingScheme::kFractional:
      return "fractional";
    case CountingScheme::kPartial:
      return "partial";
  }
  return "full";
}

std::optional<CountingScheme> parse_scheme(std::string_view text) {
  if (text == "full") return CountingScheme::kFull;
  if (text == "fractional") return CountingScheme::kFractional;
  if (text == "partial") return CountingScheme::kPartial;
  return std::nullopt;
}

double pair_weight(CountingScheme scheme, std::size_t k) {
  if (k < 2) return 0.0;
  switch (scheme) {
    case CountingScheme::kFull:
      return 1.0;
    case CountingScheme::kFractional:
      return 1.0 / static_cast<double>(k - 1);
    case CountingScheme::kPartial:
      return 1.0 / static_cast<double>(k);
  }
  return 0.0;
}

Graph build_coauthorship(std::span<const PaperRecord> papers, CountingScheme scheme) {
  // pair -> (paper size -> number of papers)
  std::map<std::pair<std::string, std::string>, std::map<std::size_t, std::size_t>> tally;
  std::set<std::string> authors;
  for (const PaperRecord& paper : papers) {
    validate(paper);
    authors.insert(paper.authors.begin(), paper.authors.end());
    const std::size_t k = paper.authors.size();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto key = std::minmax(paper.authors[i], paper.authors[j]);
        ++tally[{key.first, key.second}][k];
      }
    }
  }
  std::vector<EdgeRecord> records;
  records.reserve(tally.size());
  for (const auto& [pair, by_size] : tally) {
    double w = 0.0;
    for (const auto& [k, count] : by_size) w += static_cast<double>(count) * pair_weight(scheme, k);
    records.push_back({pair.first, pair.second, w});
  }
  const std::vector<std::string> all(authors.begin(), authors.end());
  return build_graph(records, all).graph;
}

std::vector<PaperRecord> filter_by_year(std::span<const PaperRecord> papers,
                                        std::optional<int> year_min, std::optional<int> year_max) {
  std::vector<PaperRecord> out;
  for (const PaperRecord& p : papers) {
    if (year_min || year_max) {
      auto it = p.attrs.find("year");
      if (it == p.attrs.end()) continue;
      const auto year = numeric(it->second);
      if (!year) continue;
      if (year_min && *year < *year_min) continue;
      if (year_max && *year > *year_max) continue;
    }
    out.push_back(p);
  }
  return out;
}

std::optional<int> academic_birth_year(std::span<const PaperRecord> papers, std::string_view author) {
  std::optional<double> first;
  for (const PaperRecord& p : papers) {
    if (std::find(p.authors.begin(), p.authors.end(), author) == p.authors.end()) continue;
    auto it = p.attrs.find("year");
    if (it == p.attrs.end()) continue;
    if (const auto year = numeric(it->second)) first = first ? std::min(*first, *year) : *year;
  }
  if (!first) return std::nullopt;
  return static_cast<int>(std::floor(*first));
}

bool AuthorTable::has_column(std::string_view name) const {
  return std::find(columns_.begin(), columns_.end(), name) != columns_.end();
}

bool AuthorTable::has_author(std::string_view author) const {
  return rows_.find(author) != rows_.end();
}

const AttrValue& AuthorTable::get(std::string_view author, std::string_view column) const {
  if (!has_column(column)) {
    throw InvalidInput("unknown author attribute '" + std::string(column) + "'");
  }
  auto row = rows_.find(author);
  if (row == rows_.end()) return kMissingValue;
  auto cell = row->second.find(column);
  if (cell == row->second.end()) return kMissingValue;
  return cell->second;
}

void AuthorTable::add_column(const std::string& column) {
  if (!has_column(column)) columns_.push_back(column);
}

void AuthorTable::set(const std::string& author, const std::string& column, AttrValue value) {
  add_column(column);
  rows_[author][column] = std::move(value);
}

void add_derived_author_attributes(AuthorTable& table, std::span<const PaperRecord> papers) {
  const bool want_birth = !table.has_column("academic_birth_year");
  const bool want_count = !table.has_column("papers");
  std::map<std::string, std::pair<std::optional<double>, std::size_t>> seen;
  for (const PaperRecord& p : papers) {
    std::optional<double> year;
    if (auto it = p.attrs.find("year"); it != p.attrs.end()) year = numeric(it->second);
    for (const std::string& a : p.authors) {
      auto& [first, count] = seen[a];
      ++count;
      if (year) first = first ? std::min(*first, *year) : *year;
    }
  }
  for (const auto& [author, info] : seen) {
    if (want_birth) {
      table.set(author, "academic_birth_year",
                info.first ? AttrValue(std::floor(*info.first)) : AttrValue(Missing{}));
    }
    if (want_count) table.set(author, "papers", static_cast<double>(info.second));
  }
}

AttributeExpr AttributeExpr::parse(std::string_view text) {
  text = detail::trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw InvalidInput("attribute expression must look like OP(attr), got '" + std::string(text) + "'");
  }
  const std::string_view op = detail::trim(text.substr(0, open));
  const std::string_view attr = detail::trim(text.substr(open + 1, text.size() - open - 2));
  if (attr.empty()) throw InvalidInput("attribute expression without attribute name");
  AttributeExpr expr;
  expr.attr = std::string(attr);
  if (op == "MEAN") {
    expr.op = Derivation::kMean;
  } else if (op == "ABS_DIFF") {
    expr.op = Derivation::kAbsDiff;
  } else if (op == "SAME") {
    expr.op = Derivation::kSame;
  } else if (op == "PAIR_MIN") {
    expr.op = Derivation::kPairMin;
  } else if (op == "PAIR_MAX") {
    expr.op = Derivation::kPairMax;
  } else {
    throw InvalidInput("unknown derivation '" + std::string(op) + "'");
  }
  return expr;
}

std::string AttributeExpr::to_string() const {
  const char* name = "MEAN";
  switch (op) {
    case Derivation::kMean:
      name = "MEAN";
      break;
    case Derivation::kAbsDiff:
      name = "ABS_DIFF";
      break;
    case Derivation::kSame:
      name = "SAME";
      break;
    case Derivation::kPairMin:
      name = "PAIR_MIN";
      break;
    case Derivation::kPairMax:
      name = "PAIR_MAX";
      break;
  }
  return std::string(name) + "(" + attr + ")";
}

AttrValue edge_attribute(const AttributeExpr& expr, std::string_view u, std::string_view v,
                         const AuthorTable& authors) {
  const AttrValue& a = authors.get(u, expr.attr);
  const AttrValue& b = authors.get(v, expr.attr);
  if (is_missing(a) || is_missing(b)) return Missing{};
  if (expr.op == Derivation::kSame) return a == b;
  const auto x = numeric(a);
  const auto y = numeric(b);
  if (!x || !y) {
    throw InvalidInput(expr.to_string() + " needs numeric values, got '" + format_attr_value(a) +
                       "' and '" + format_attr_value(b) + "'");
  }
  switch (expr.op) {
    case Derivation::kMean:
      return (*x + *y) / 2.0;
    case Derivation::kAbsDiff:
      return std::abs(*x - *y);
    case Derivation::kPairMin:
      return std::min(*x, *y);
    case Derivation::kPairMax:
      return std::max(*x, *y);
    case Derivation::kSame:
      break;
  }
  return Missing{};
}

double DistributionReport::skeleton_total() const {
  double total = missing_skeleton;
  for (const auto& bin : bins) total += bin.skeleton_weight;
  return total;
}

double DistributionReport::remainder_total() const {
  double total = missing_remainder;
  for (const auto& bin : bins) total += bin.remainder_weight;
  return total;
}

DistributionReport distribution_report(const Graph& g, std::span<const EdgeId> skeleton_edges,
                                       const AttributeExpr& expr, const AuthorTable& authors,
                                       const Binning& binning) {
  BinAccumulator acc(binning);
  if (!authors.has_column(expr.attr)) {
    throw InvalidInput("unknown author attribute '" + expr.attr + "'");
  }
  const std::vector<bool> in_skeleton = skeleton_mask(g, skeleton_edges);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    acc.add(edge_attribute(expr, g.name(ed.u), g.name(ed.v), authors), g.weight(e), in_skeleton[e]);
  }
  return acc.finish(expr.to_string());
}

DistributionReport distribution_report(const Graph& g, const SkeletonResult& sk,
                                       const AttributeExpr& expr, const AuthorTable& authors,
                                       const Binning& binning) {
  if (sk.node_count != g.node_count() || sk.edge_count != g.edge_count()) {
    throw InvalidInput("skeleton was not extracted from this graph");
  }
  return distribution_report(g, sk.kept, expr, authors, binning);
}

DistributionReport paper_distribution_report(const Graph& g, std::span<const EdgeId> skeleton_edges,
                                             std::span<const PaperRecord> papers,
                                             CountingScheme scheme, const std::string& paper_attr,
                                             const Binning& binning) {
  BinAccumulator acc(binning);
  const std::vector<bool> in_skeleton = skeleton_mask(g, skeleton_edges);
  for (const PaperRecord& paper : papers) {
    validate(paper);
    const std::size_t k = paper.authors.size();
    if (k < 2) continue;
    const double w = pair_weight(scheme, k);
    auto it = paper.attrs.find(paper_attr);
    const AttrValue& value = it == paper.attrs.end() ? kMissingValue : it->second;
    for (std::size_t i = 0; i < k; ++i) {
      const auto a = g.find_node(paper.authors[i]);
      if (!a) continue;
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto b = g.find_node(paper.authors[j]);
        if (!b) continue;
        if (const auto e = g.find_edge(*a, *b)) acc.add(value, w, in_skeleton[*e]);
      }
    }
  }
  return acc.finish(paper_attr);
}

std::vector<PaperRecord> load_papers(const std::filesystem::path& authorship_csv,
                                     const std::optional<std::filesystem::path>& metadata_csv) {
  const auto rows = detail::read_csv_file(authorship_csv);
  std::vector<PaperRecord> papers;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (r == 0 && !row.empty() && detail::trim(row[0]) == "paper_id") continue;
    if (row.size() < 2) {
      throw InvalidInput(authorship_csv.string() + ": row " + std::to_string(r + 1) +
                         " needs paper_id,author_id");
    }
    const std::string paper(detail::trim(row[0]));
    const std::string author(detail::trim(row[1]));
    if (paper.empty() || author.empty()) {
      throw InvalidInput(authorship_csv.string() + ": row " + std::to_string(r + 1) +
                         " has an empty identifier");
    }
    auto [it, inserted] = index.try_emplace(paper, papers.size());
    if (inserted) papers.push_back({paper, {}, {}});
    papers[it->second].authors.push_back(author);
  }
  if (metadata_csv) {
    const auto meta = detail::read_csv_file(*metadata_csv);
    if (meta.empty()) return papers;
    const auto& header = meta.front();
    for (std::size_t r = 1; r < meta.size(); ++r) {
      const auto& row = meta[r];
      if (row.empty()) continue;
      auto it = index.find(std::string(detail::trim(row[0])));
      if (it == index.end()) continue;
      for (std::size_t c = 1; c < header.size(); ++c) {
        const std::string name(detail::trim(header[c]));
        papers[it->second].attrs[name] = c < row.size() ? parse_attr_value(row[c]) : AttrValue(Missing{});
      }
    }
  }
  return papers;
}

AuthorTable load_author_table(const std::filesystem::path& csv) {
  const auto rows = detail::read_csv_file(csv);
  AuthorTable table;
  if (rows.empty()) return table;
  const auto& header = rows.front();
  for (std::size_t c = 1; c < header.size(); ++c) table.add_column(std::string(detail::trim(header[c])));
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    const std::string author(detail::trim(row[0]));
    if (author.empty()) continue;
    if (!seen.insert(author).second) {
      throw InvalidInput(csv.string() + ": author '" + author + "' appears twice");
    }
    for (std::size_t c = 1; c < header.size(); ++c) {
      table.set(author, std::string(detail::trim(header[c])),
                c < row.size() ? parse_attr_value(row[c]) : AttrValue(Missing{}));
    }
  }
  return table;
}

}  // namespace convexa
