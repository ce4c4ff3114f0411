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


#include "options.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

namespace gcs::cli {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw UsageError("invalid number '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

int to_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid integer '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {to_double(parts[0], "complex value"), 0.0};
  if (parts.size() == 2) {
    return {to_double(parts[0], "complex value"), to_double(parts[1], "complex value")};
  }
  throw UsageError("expected RE,IM but got '" + std::string(text) + "'");
}

SpatialGrid parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw UsageError("expected MIN:MAX:POINTS but got '" + std::string(text) + "'");
  }
  const double lo = to_double(parts[0], "grid");
  const double hi = to_double(parts[1], "grid");
  const int points = to_int(parts[2], "grid");
  if (!(lo < hi) || points < 2) {
    throw UsageError("grid needs MIN < MAX and at least 2 points");
  }
  return SpatialGrid(lo, hi, points);
}

double TimeRange::at(int frame) const {
  if (frames == 1) return min;
  return min + (max - min) * frame / (frames - 1);
}

TimeRange parse_time_range(std::string_view text, int default_frames) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3) {
    throw UsageError("expected MIN:MAX[:FRAMES] but got '" + std::string(text) + "'");
  }
  TimeRange range;
  range.min = to_double(parts[0], "time range");
  range.max = to_double(parts[1], "time range");
  range.frames = parts.size() == 3 ? to_int(parts[2], "time range") : default_frames;
  if (range.max < range.min || range.frames < 1) {
    throw UsageError("time range needs MIN <= MAX and FRAMES >= 1");
  }
  return range;
}

std::pair<std::string, double> parse_key_value(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw UsageError("expected key=value but got '" + std::string(text) + "'");
  }
  return {std::string(text.substr(0, eq)), to_double(text.substr(eq + 1), "key=value")};
}

Complex CommonOptions::resolve_alpha(Complex fallback) const {
  if (alpha && (alpha_mag || alpha_phase)) {
    throw UsageError("--alpha cannot be combined with --alpha-mag/--alpha-phase");
  }
  if (alpha) return parse_complex(*alpha);
  if (alpha_mag || alpha_phase) {
    return std::polar(alpha_mag.value_or(std::abs(fallback)), alpha_phase.value_or(0.0));
  }
  return fallback;
}

Label CommonOptions::label(int default_n, Complex default_alpha) const {
  const Label out{n.value_or(default_n), resolve_alpha(default_alpha), omega};
  if (out.n < 0) throw UsageError("--n must be non-negative");
  if (!(out.omega > 0.0)) throw UsageError("--omega must be positive");
  return out;
}

}  // namespace gcs::cli
