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

#ifndef CONVEXA_SRC_CSV_HPP_
#define CONVEXA_SRC_CSV_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convexa::detail {

using CsvRow = std::vector<std::string>;

// Comma-separated values with RFC 4180 quoting. Blank lines are skipped.
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string source);

  // Next record, or nullopt at end of input.
  std::optional<CsvRow> next();
  std::size_t line() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
};

std::vector<CsvRow> read_csv_file(const std::filesystem::path& path);

std::optional<double> parse_double(std::string_view text);

std::string_view trim(std::string_view s);

}  // namespace convexa::detail

#endif  // CONVEXA_SRC_CSV_HPP_
