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

#pragma once

#include <span>
#include <vector>

namespace gcs {

/// Uniform grid of `points` samples on [min, max], both ends included.
class SpatialGrid {
 public:
  SpatialGrid(double min, double max, int points);

  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  int points() const noexcept { return points_; }
  double spacing() const noexcept { return (max_ - min_) / (points_ - 1); }
  double operator[](int i) const noexcept {
    return i == points_ - 1 ? max_ : min_ + i * spacing();
  }
  std::vector<double> values() const;

 private:
  double min_;
  double max_;
  int points_;
};

/// Composite Simpson rule over uniformly spaced samples. An even sample count
/// closes the last three panels with Simpson's 3/8 rule.
double simpson(std::span<const double> samples, double spacing);

}  // namespace gcs
