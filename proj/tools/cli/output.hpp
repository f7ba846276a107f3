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

#ifndef CONVEXA_TOOLS_CLI_OUTPUT_HPP_
#define CONVEXA_TOOLS_CLI_OUTPUT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace convexa::cli {

using Json = nlohmann::ordered_json;

struct RunMeta {
  std::string command;
  Json config = Json::object();
  std::uint64_t seed = 0;
  // Facts observed while running, such as dropped self-loops.
  Json notes = Json::object();
};

// Writes `content` to `path` through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, std::string_view content);

// Writes to stdout when `path` is empty, otherwise to the file plus a
// `<file>.meta.json` sidecar.
void emit(const std::optional<std::filesystem::path>& path, std::string_view content,
          const RunMeta& meta, std::ostream& out);

Json meta_json(const RunMeta& meta);

// Number formatting shared by all CSV writers.
std::string num(double x);
std::string num(const std::optional<double>& x);

std::string csv_field(std::string_view text);

}  // namespace convexa::cli

#endif  // CONVEXA_TOOLS_CLI_OUTPUT_HPP_
