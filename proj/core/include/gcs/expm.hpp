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

#include <Eigen/Dense>

namespace gcs {

/// Dense matrix exponential by scaling and squaring with a fixed (13,13)
/// Padé approximant. The scaling exponent s is the smallest one with
/// ‖A‖₁ / 2ˢ ≤ 5.37, after which the approximant is squared s times.
///
/// For skew-Hermitian A the diagonal Padé approximant is unitary up to
/// rounding, so the result stays unitary to ~1e-14 for D ≤ 200.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a);

/// exp(A)·V without forming exp(A): the interval is cut into substeps with
/// ‖A‖₁/steps ≤ 1 and each substep sums the Taylor series until the next
/// term falls below machine precision relative to the block.
Eigen::MatrixXcd expm_action(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& v);

}  // namespace gcs
