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


// One function per subcommand. Each writes its files plus manifest.json into
// the resolved output directory and returns a JSON summary for stdout.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "options.hpp"
#include "output.hpp"
#include "verify.hpp"

namespace gcs::cli {

inline constexpr double kDefaultTailTolerance = 1e-10;

Json cmd_density(const CommonOptions& opts);
Json cmd_wavefunction(const CommonOptions& opts);
Json cmd_field_density(const CommonOptions& opts, const std::optional<std::string>& phases);
Json cmd_photon_dist(const CommonOptions& opts, int k_max);
Json cmd_expect(const CommonOptions& opts);

struct BeamsplitArgs {
  std::optional<std::string> reflection;
  std::optional<std::string> transmission;
};
Json cmd_beamsplit(const CommonOptions& opts, const BeamsplitArgs& args);

struct DriveArgs {
  std::string pulse = "gaussian";
  std::vector<std::string> params;
  int steps = 4000;
};
Json cmd_drive(const CommonOptions& opts, const DriveArgs& args);

struct VerifyOutcome {
  Json report;
  std::string table;
  bool passed = false;
};
VerifyOutcome cmd_verify(const CommonOptions& opts, const std::string& suite,
                         const VerifyHooks& hooks = {});

}  // namespace gcs::cli
