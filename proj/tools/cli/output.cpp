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

#include "output.hpp"

#include <fstream>
#include <ostream>
#include <system_error>

#include "convexa/edge_list_io.hpp"
#include "convexa/error.hpp"

#ifndef CONVEXA_VERSION
#define CONVEXA_VERSION "0.0.0"
#endif

namespace convexa::cli {

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write " + path.string());
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    file.close();
    if (!file) throw IoError("failed writing " + path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

Json meta_json(const RunMeta& meta) {
  Json j;
  j["tool"] = "convexa";
  j["version"] = CONVEXA_VERSION;
  j["command"] = meta.command;
  j["seed"] = meta.seed;
  j["config"] = meta.config;
  if (!meta.notes.empty()) j["notes"] = meta.notes;
  return j;
}

void emit(const std::optional<std::filesystem::path>& path, std::string_view content,
          const RunMeta& meta, std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  write_atomic(*path, content);
  std::filesystem::path sidecar = *path;
  sidecar += ".meta.json";
  write_atomic(sidecar, meta_json(meta).dump(2) + "\n");
}

std::string num(double x) { return format_number(x); }

std::string num(const std::optional<double>& x) { return x ? format_number(*x) : "NA"; }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace convexa::cli
