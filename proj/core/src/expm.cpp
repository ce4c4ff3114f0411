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

#include "gcs/expm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "gcs/error.hpp"

namespace gcs {
namespace {

// Largest 1-norm for which the (13,13) approximant reaches double precision.
constexpr double kTheta13 = 5.371920351148152;

constexpr std::array<double, 14> kPade13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

double one_norm(const Eigen::MatrixXcd& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) {
    throw DomainError("expm: matrix must be square");
  }
  const Eigen::Index dim = a.rows();
  if (dim == 0) return a;
  if (a.isZero(0.0)) return Eigen::MatrixXcd::Identity(dim, dim);

  const double norm = one_norm(a);
  if (!std::isfinite(norm)) {
    throw DomainError("expm: non-finite matrix entries");
  }
  int squarings = 0;
  if (norm > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  }
  const Eigen::MatrixXcd scaled = a / std::ldexp(1.0, squarings);

  const auto& b = kPade13;
  const Eigen::MatrixXcd ident = Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd a2 = scaled * scaled;
  const Eigen::MatrixXcd a4 = a2 * a2;
  const Eigen::MatrixXcd a6 = a4 * a2;

  const Eigen::MatrixXcd u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) +
                                   b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident;
  const Eigen::MatrixXcd u = scaled * u_inner;
  const Eigen::MatrixXcd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                             b[4] * a4 + b[2] * a2 + b[0] * ident;

  Eigen::MatrixXcd result = (v - u).partialPivLu().solve(v + u);
  for (int s = 0; s < squarings; ++s) {
    result = (result * result).eval();
  }
  return result;
}

Eigen::MatrixXcd expm_action(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& v) {
  if (a.rows() != a.cols() || a.cols() != v.rows()) {
    throw DomainError("expm_action: dimension mismatch");
  }
  const double norm = one_norm(a);
  if (!std::isfinite(norm)) {
    throw DomainError("expm_action: non-finite matrix entries");
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const Eigen::MatrixXcd step = a / static_cast<double>(steps);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxTerms = 60;

  Eigen::MatrixXcd block = v;
  for (int s = 0; s < steps; ++s) {
    Eigen::MatrixXcd term = block;
    Eigen::MatrixXcd sum = block;
    const double scale = std::max(block.norm(), std::numeric_limits<double>::min());
    for (int j = 1; j <= kMaxTerms; ++j) {
      term = (step * term) / static_cast<double>(j);
      sum += term;
      if (term.norm() <= 0.25 * eps * scale) break;
    }
    block = std::move(sum);
  }
  return block;
}

}  // namespace gcs
