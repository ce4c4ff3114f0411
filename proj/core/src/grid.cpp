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

#include "gcs/grid.hpp"

#include <cmath>

#include "gcs/error.hpp"

namespace gcs {

SpatialGrid::SpatialGrid(double min, double max, int points)
    : min_(min), max_(max), points_(points) {
  if (points < 2) throw DomainError("SpatialGrid: need at least 2 points");
  if (!(min < max) || !std::isfinite(min) || !std::isfinite(max)) {
    throw DomainError("SpatialGrid: need finite min < max");
  }
}

std::vector<double> SpatialGrid::values() const {
  std::vector<double> out(points_);
  for (int i = 0; i < points_; ++i) out[i] = (*this)[i];
  return out;
}

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 4) return 3.0 * h / 8.0 * (f[0] + 3.0 * f[1] + 3.0 * f[2] + f[3]);

  // Simpson needs an even number of panels (odd number of samples).
  const std::size_t simpson_end = (n % 2 == 1) ? n - 1 : n - 4;
  double sum = f[0] + f[simpson_end];
  for (std::size_t i = 1; i < simpson_end; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
  double total = sum * h / 3.0;
  if (simpson_end != n - 1) {
    const std::size_t j = simpson_end;
    total += 3.0 * h / 8.0 * (f[j] + 3.0 * f[j + 1] + 3.0 * f[j + 2] + f[j + 3]);
  }
  return total;
}

}  // namespace gcs
