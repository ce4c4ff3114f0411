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

#include "gcs/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>

#include "gcs/error.hpp"
#include "gcs/expm.hpp"

namespace gcs::fock {
namespace {

constexpr double kHermitianTolerance = 1e-10;

double truncation_budget(double abs_alpha, int n) {
  return abs_alpha * abs_alpha + 6.0 * abs_alpha + 10.0 + 2.0 * n;
}

void require_dim(int dim) {
  if (dim < 2) {
    throw DomainError("Fock dimension must be at least 2, got " + std::to_string(dim));
  }
}

void check_truncation(Complex alpha, int n, int dim, const TruncationPolicy& policy) {
  if (!policy.enforce) return;
  const double budget = truncation_budget(std::abs(alpha), n);
  if (!(budget < dim)) {
    std::ostringstream msg;
    msg << "Fock dimension " << dim << " too small for |alpha|=" << std::abs(alpha)
        << ", n=" << n << " (need D > " << budget << ")";
    // The actual tail is not known without building the state; report the
    // Poisson weight beyond D as an estimate.
    const double mean = std::norm(alpha) + n;
    double log_term = -mean + dim * std::log(std::max(mean, 1e-300)) - std::lgamma(dim + 1.0);
    throw TruncationError(msg.str(), std::exp(log_term));
  }
}

}  // namespace

ModeOperator::ModeOperator(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols()) {
    throw DomainError("ModeOperator: matrix must be square");
  }
}

ModeOperator operator*(const ModeOperator& lhs, const ModeOperator& rhs) {
  if (lhs.dim() != rhs.dim()) throw DomainError("ModeOperator: dimension mismatch");
  return ModeOperator(lhs.matrix() * rhs.matrix());
}

FockVector::FockVector(Eigen::VectorXcd coeffs, double omega)
    : coeffs_(std::move(coeffs)), omega_(omega) {
  if (coeffs_.size() < 1) throw DomainError("FockVector: empty coefficient vector");
  if (!(omega_ > 0.0)) throw DomainError("FockVector: omega must be positive");
  if (!coeffs_.allFinite()) throw DomainError("FockVector: non-finite coefficients");
}

FockVector FockVector::basis(int k, int dim, double omega) {
  if (k < 0 || k >= dim) {
    throw DomainError("FockVector::basis: level " + std::to_string(k) +
                      " outside dimension " + std::to_string(dim));
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
  c[k] = 1.0;
  return FockVector(std::move(c), omega);
}

int safe_dimension(double abs_alpha, int n) {
  return static_cast<int>(std::floor(truncation_budget(abs_alpha, n))) + 1;
}

LadderOperators ladder_matrices(int dim) {
  require_dim(dim);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  Eigen::MatrixXcd adag = a.adjoint();
  Eigen::MatrixXcd num = adag * a;
  return {ModeOperator(std::move(a)), ModeOperator(std::move(adag)),
          ModeOperator(std::move(num))};
}

ModeOperator displacement_matrix(Complex alpha, int dim, const TruncationPolicy& policy) {
  require_dim(dim);
  check_truncation(alpha, 0, dim, policy);
  const auto ops = ladder_matrices(dim);
  const Eigen::MatrixXcd generator =
      alpha * ops.creation.matrix() - std::conj(alpha) * ops.annihilation.matrix();
  return ModeOperator(expm(generator));
}

FockVector gcs_vector(int n, Complex alpha, int dim, const TruncationPolicy& policy,
                      double omega) {
  require_dim(dim);
  if (n < 0) throw DomainError("gcs_vector: negative n");
  if (policy.enforce && !(2 * n < dim)) {
    throw TruncationError("gcs_vector: need n < D/2", 1.0);
  }
  if (n >= dim) throw DomainError("gcs_vector: n outside the truncated space");
  check_truncation(alpha, n, dim, policy);
  const ModeOperator disp = displacement_matrix(alpha, dim, TruncationPolicy{false, 0.0});
  return FockVector(disp.matrix().col(n), omega);
}

Complex expectation(const ModeOperator& op, const FockVector& v,
                    const TruncationPolicy& policy) {
  if (op.dim() != v.dim()) {
    throw DomainError("expectation: operator dimension " + std::to_string(op.dim()) +
                      " does not match vector dimension " + std::to_string(v.dim()));
  }
  const double norm2 = v.coeffs().squaredNorm();
  if (policy.enforce && v.tail_mass() / norm2 > policy.tail_tolerance) {
    throw TruncationError("expectation: vector tail mass exceeds tolerance",
                          v.tail_mass() / norm2);
  }
  return v.coeffs().dot(op.matrix() * v.coeffs()) / norm2;
}

Complex inner(const FockVector& u, const FockVector& v) {
  if (u.dim() != v.dim()) throw DomainError("inner: dimension mismatch");
  return u.coeffs().dot(v.coeffs());
}

ModeOperator position_operator(int dim, double omega) {
  const auto ops = ladder_matrices(dim);
  return ModeOperator((ops.annihilation.matrix() + ops.creation.matrix()) /
                      std::sqrt(2.0 * omega));
}

ModeOperator momentum_operator(int dim, double omega) {
  const auto ops = ladder_matrices(dim);
  const Complex factor(0.0, -std::sqrt(omega / 2.0));
  return ModeOperator(factor * (ops.annihilation.matrix() - ops.creation.matrix()));
}

ModeOperator field_operator(int dim, double omega, double kx) {
  const auto ops = ladder_matrices(dim);
  const Complex phase = std::polar(1.0, kx + std::numbers::pi / 2.0);
  return ModeOperator((phase * ops.annihilation.matrix() +
                       std::conj(phase) * ops.creation.matrix()) /
                      std::sqrt(2.0 * omega));
}

std::pair<ModeOperator, ModeOperator> quadrature_operators(int dim) {
  const auto ops = ladder_matrices(dim);
  const double scale = 1.0 / (2.0 * std::numbers::sqrt2);
  Eigen::MatrixXcd x = scale * (ops.annihilation.matrix() + ops.creation.matrix());
  Eigen::MatrixXcd y =
      Complex(0.0, scale) * (ops.annihilation.matrix() - ops.creation.matrix());
  return {ModeOperator(std::move(x)), ModeOperator(std::move(y))};
}

ModeOperator oscillator_hamiltonian(int dim, double omega) {
  require_dim(dim);
  Eigen::VectorXcd diag(dim);
  for (int k = 0; k < dim; ++k) diag[k] = omega * (k + 0.5);
  return ModeOperator(diag.asDiagonal().toDenseMatrix());
}

FockVector free_evolution(const FockVector& v, double t) {
  Eigen::VectorXcd c = v.coeffs();
  for (int k = 0; k < v.dim(); ++k) c[k] *= std::polar(1.0, -(k + 0.5) * v.omega() * t);
  return FockVector(std::move(c), v.omega());
}

Eigen::MatrixXcd schrodinger_evolve_block(const HamiltonianFn& hamiltonian,
                                          const Eigen::MatrixXcd& states, double t0,
                                          double t1, int steps) {
  if (steps < 1) throw DomainError("schrodinger_evolve: steps must be >= 1");
  const double dt = (t1 - t0) / steps;
  Eigen::MatrixXcd block = states;
  for (int s = 0; s < steps; ++s) {
    const double t_mid = t0 + (s + 0.5) * dt;
    const Eigen::MatrixXcd h = hamiltonian(t_mid);
    if (h.rows() != block.rows() || h.cols() != block.rows()) {
      throw DomainError("schrodinger_evolve: Hamiltonian dimension mismatch");
    }
    const double asymmetry = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > kHermitianTolerance) {
      std::ostringstream msg;
      msg << "schrodinger_evolve: Hamiltonian not Hermitian at t=" << t_mid
          << " (max asymmetry " << asymmetry << ")";
      throw DomainError(msg.str());
    }
    block = expm_action(Complex(0.0, -dt) * h, block);
  }
  return block;
}

FockVector schrodinger_evolve(const HamiltonianFn& hamiltonian, const FockVector& v0,
                              double t0, double t1, int steps) {
  Eigen::MatrixXcd out = schrodinger_evolve_block(hamiltonian, v0.coeffs(), t0, t1, steps);
  return FockVector(out.col(0), v0.omega());
}

}  // namespace gcs::fock
