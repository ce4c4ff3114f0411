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

#include "gcs/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include "gcs/error.hpp"

namespace gcs::specfun {
namespace {

void require_degree(int n, const char* what) {
  if (n < 0) {
    throw DomainError(std::string(what) + ": negative degree " + std::to_string(n));
  }
}

}  // namespace

double hermite(int n, double z) {
  require_degree(n, "hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int j = 1; j < n; ++j) {
    const double next = 2.0 * z * cur - 2.0 * j * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_assoc(int k, int m, double z) {
  require_degree(k, "laguerre_assoc");
  if (m < 0) {
    throw DomainError("laguerre_assoc: negative upper index " + std::to_string(m));
  }
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + m - z;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + m - z) * cur - (j + m) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int n, double z) { return laguerre_assoc(n, 0, z); }

double eigenfunction(int n, double omega, double x) {
  require_degree(n, "eigenfunction");
  if (!(omega > 0.0)) {
    throw DomainError("eigenfunction: omega must be positive");
  }
  // φ_{j+1} = √(2/(j+1)) ξ φ_j − √(j/(j+1)) φ_{j−1},  ξ = √ω x.
  const double xi = std::sqrt(omega) * x;
  double prev = 0.0;
  double cur = std::pow(omega / std::numbers::pi, 0.25) * std::exp(-0.5 * xi * xi);
  for (int j = 0; j < n; ++j) {
    const double next =
        std::sqrt(2.0 / (j + 1.0)) * xi * cur - std::sqrt(j / (j + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_factorial(int n) {
  require_degree(n, "log_factorial");
  if (n <= 20) {
    std::uint64_t product = 1;
    for (int j = 2; j <= n; ++j) product *= static_cast<std::uint64_t>(j);
    return std::log(static_cast<double>(product));
  }
  return std::lgamma(n + 1.0);
}

}  // namespace gcs::specfun
