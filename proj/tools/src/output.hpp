// Copyright 2026 The gcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Deterministic CSV/JSON writers and the per-directory run manifest.

#pragma once

#include <cstdio>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

namespace gcs::cli {

using Json = nlohmann::ordered_json;

/// --out if given, else $GCS_OUT_DIR/<command>, else gcs_out/<command>.
std::filesystem::path resolve_output_dir(const std::optional<std::string>& out,
                                         const std::string& command);

/// Writes rows of doubles with 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::initializer_list<const char*> columns);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(std::initializer_list<double> values);

 private:
  std::FILE* file_;
  std::size_t columns_;
};

void write_json(const std::filesystem::path& path, const Json& value);

struct Manifest {
  std::string command;
  Json parameters = Json::object();
  std::optional<int> dim;
  std::optional<double> tail_mass;
  Json tolerances = Json::object();
  std::vector<std::string> files;

  Json to_json() const;
  /// Writes manifest.json into `dir`.
  void write(const std::filesystem::path& dir) const;
};

}  // namespace gcs::cli
