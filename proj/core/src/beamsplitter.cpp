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

#include "gcs/beamsplitter.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "gcs/error.hpp"
#include "gcs/fock.hpp"
#include "gcs/specfun.hpp"

namespace gcs::beamsplitter {
namespace {

constexpr double kConstraintTolerance = 1e-12;
constexpr double kNormTolerance = 1e-10;

double binomial_sqrt(int n, int m) {
  return std::exp(0.5 * (specfun::log_factorial(n) - specfun::log_factorial(m) -
                         specfun::log_factorial(n - m)));
}

Complex int_pow(Complex z, int p) {
  Complex out(1.0, 0.0);
  for (int i = 0; i < p; ++i) out *= z;
  return out;
}

}  // namespace

Spec Spec::symmetric() {
  return Spec{Complex(0.0, 1.0 / std::numbers::sqrt2), Complex(1.0 / std::numbers::sqrt2, 0.0)};
}

ConstraintResiduals residuals(const Spec& spec) {
  const Complex r = spec.reflection;
  const Complex t = spec.transmission;
  return {std::abs(std::norm(r) + std::norm(t) - 1.0),
          std::abs(r * std::conj(t) + t * std::conj(r))};
}

Spec validate(const Spec& spec) {
  const auto res = residuals(spec);
  if (!(res.power <= kConstraintTolerance) || !(res.coherence <= kConstraintTolerance)) {
    std::ostringstream msg;
    msg << "beamsplitter: |R|^2+|T|^2-1 residual " << res.power << ", RT*+TR* residual "
        << res.coherence << " (tolerance " << kConstraintTolerance << ")";
    throw DomainError(msg.str());
  }
  return spec;
}

std::vector<OutputTerm> split_gcs(int n, Complex alpha, const Spec& spec, double omega) {
  if (n < 0) throw DomainError("split_gcs: negative n");
  const Spec s = validate(spec);
  std::vector<OutputTerm> terms;
  terms.reserve(n + 1);
  for (int m = 0; m <= n; ++m) {
    OutputTerm term;
    term.m = m;
    term.amplitude = binomial_sqrt(n, m) * int_pow(s.reflection, m) *
                     int_pow(s.transmission, n - m);
    term.arm3 = Label{m, s.reflection * alpha, omega};
    term.arm4 = Label{n - m, s.transmission * alpha, omega};
    terms.push_back(term);
  }
  return terms;
}

Eigen::MatrixXcd two_mode_oracle(int n, Complex alpha, const Spec& spec, int dim) {
  if (dim < 1) throw DomainError("two_mode_oracle: dim must be positive");
  const auto terms = split_gcs(n, alpha, spec);
  Eigen::MatrixXcd joint = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::VectorXcd arm3(dim);
  Eigen::VectorXcd arm4(dim);
  for (const auto& term : terms) {
    if (term.amplitude == Complex(0.0, 0.0)) continue;
    for (int k = 0; k < dim; ++k) {
      arm3[k] = expansion_coefficient(term.arm3.n, term.arm3.alpha, k);
      arm4[k] = expansion_coefficient(term.arm4.n, term.arm4.alpha, k);
    }
    joint.noalias() += term.amplitude * arm3 * arm4.transpose();
  }
  const double norm2 = joint.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    std::ostringstream msg;
    msg << "two_mode_oracle: joint norm " << norm2 << " at dim " << dim
        << " (tail not captured)";
    throw TruncationError(msg.str(), 1.0 - norm2);
  }
  return joint;
}

Eigen::MatrixXcd displaced_number_split(int n, Complex alpha, const Spec& spec, int dim) {
  if (n >= dim) throw DomainError("displaced_number_split: n must be below dim");
  const Spec s = validate(spec);
  Eigen::MatrixXcd split = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m <= n; ++m) {
    split(m, n - m) = binomial_sqrt(n, m) * int_pow(s.reflection, m) *
                      int_pow(s.transmission, n - m);
  }
  // Each arm's displacement acts on its own index: D₃ C D₄ᵀ.
  const fock::TruncationPolicy policy;
  const auto d3 = fock::displacement_matrix(s.reflection * alpha, dim, policy);
  const auto d4 = fock::displacement_matrix(s.transmission * alpha, dim, policy);
  return d3.matrix() * split * d4.matrix().transpose();
}

std::pair<double, double> arm_mean_photons(const Eigen::MatrixXcd& joint) {
  double mean3 = 0.0;
  double mean4 = 0.0;
  for (Eigen::Index j = 0; j < joint.rows(); ++j) {
    for (Eigen::Index k = 0; k < joint.cols(); ++k) {
      const double p = std::norm(joint(j, k));
      mean3 += j * p;
      mean4 += k * p;
    }
  }
  const double total = joint.squaredNorm();
  return {mean3 / total, mean4 / total};
}

Eigen::MatrixXcd gcs_basis_amplitudes(const std::vector<OutputTerm>& terms) {
  int n = 0;
  for (const auto& t : terms) n = std::max(n, t.arm3.n + t.arm4.n);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  for (const auto& t : terms) out(t.arm3.n, t.arm4.n) += t.amplitude;
  return out;
}

}  // namespace gcs::beamsplitter
