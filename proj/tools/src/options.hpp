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


// Parsing of the command-line value formats shared by every subcommand.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gcs/grid.hpp"
#include "gcs/states.hpp"

namespace gcs::cli {

/// Raised for malformed user input; mapped to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// "RE,IM" or a bare real "RE".
Complex parse_complex(std::string_view text);

/// "MIN:MAX:POINTS".
SpatialGrid parse_grid(std::string_view text);

struct TimeRange {
  double min = 0.0;
  double max = 0.0;
  int frames = 1;

  double at(int frame) const;
};

/// "MIN:MAX" or "MIN:MAX:FRAMES"; frames defaults to `default_frames`.
TimeRange parse_time_range(std::string_view text, int default_frames);

/// "key=value".
std::pair<std::string, double> parse_key_value(std::string_view text);

/// Options that every subcommand accepts. Unset values fall back to
/// command-specific defaults.
struct CommonOptions {
  std::optional<int> n;
  std::optional<std::string> alpha;
  std::optional<double> alpha_mag;
  std::optional<double> alpha_phase;
  double omega = 1.0;
  std::optional<std::string> grid;
  std::optional<std::string> t;
  std::optional<std::string> out;
  std::optional<int> dim;
  std::optional<double> tol;

  /// α from --alpha or --alpha-mag/--alpha-phase, else `fallback`.
  Complex resolve_alpha(Complex fallback) const;
  Label label(int default_n, Complex default_alpha) const;
};

}  // namespace gcs::cli
