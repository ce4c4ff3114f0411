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


#include "output.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "fmt/format.h"

#include "gcs/version.hpp"

namespace gcs::cli {

std::filesystem::path resolve_output_dir(const std::optional<std::string>& out,
                                         const std::string& command) {
  if (out) return *out;
  const char* env = std::getenv("GCS_OUT_DIR");
  const std::filesystem::path base = env != nullptr && *env != '\0' ? env : "gcs_out";
  return base / command;
}

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     std::initializer_list<const char*> columns)
    : columns_(columns.size()) {
  std::filesystem::create_directories(path.parent_path());
  file_ = std::fopen(path.c_str(), "w");
  if (file_ == nullptr) throw std::runtime_error("cannot open " + path.string());
  std::string header;
  for (const char* c : columns) {
    if (!header.empty()) header += ',';
    header += c;
  }
  fmt::print(file_, "{}\n", header);
}

CsvWriter::~CsvWriter() { std::fclose(file_); }

void CsvWriter::row(std::initializer_list<double> values) {
  if (values.size() != columns_) throw std::logic_error("CsvWriter: column count mismatch");
  bool first = true;
  for (double v : values) {
    if (!first) std::fputc(',', file_);
    fmt::print(file_, "{:.17g}", v);
    first = false;
  }
  std::fputc('\n', file_);
}

void write_json(const std::filesystem::path& path, const Json& value) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << value.dump(2) << '\n';
}

Json Manifest::to_json() const {
  Json j;
  j["command"] = command;
  j["parameters"] = parameters;
  j["library_version"] = std::string(gcs::kVersion);
  j["dim"] = dim ? Json(*dim) : Json(nullptr);
  j["tail_mass"] = tail_mass ? Json(*tail_mass) : Json(nullptr);
  j["tolerances"] = tolerances;
  j["files"] = files;
  return j;
}

void Manifest::write(const std::filesystem::path& dir) const {
  write_json(dir / "manifest.json", to_json());
}

}  // namespace gcs::cli
