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


// Invariant suites run by `gcs verify`.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gcs/states.hpp"

namespace gcs::cli {

struct CheckResult {
  std::string suite;
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Entry points the suites call through, so a test can swap in a broken
/// implementation and confirm that the suite notices.
struct VerifyHooks {
  std::function<double(int, Complex)> g2 = gcs::g2;
};

std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all". Throws UsageError for an
/// unknown name.
std::vector<CheckResult> run_suite(const std::string& name, const VerifyHooks& hooks = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gcs::cli
