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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "gcs/error.hpp"
#include "gcs/expm.hpp"
#include "oracles.hpp"

using namespace gcs::fock;
using gcs::testing::factorial_ld;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(fock, ladder_matrices_small) {
  const auto d2 = ladder_matrices(2);
  EXPECT_EQ(d2.annihilation.matrix()(0, 1), Complex(1.0, 0.0));
  EXPECT_EQ(d2.annihilation.matrix().cwiseAbs().sum(), 1.0);

  const auto d4 = ladder_matrices(4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(std::abs(d4.number.matrix()(i, j) - (i == j ? double(i) : 0.0)), 0.0, 1e-15);
    }
  }
  EXPECT_THROW(ladder_matrices(1), gcs::DomainError);
}

TEST(fock, commutator_on_masked_block) {
  const auto ops = ladder_matrices(8);
  const Eigen::MatrixXcd comm = ops.annihilation.matrix() * ops.creation.matrix() -
                                ops.creation.matrix() * ops.annihilation.matrix();
  EXPECT_LT(max_abs(comm.topLeftCorner(7, 7) - Eigen::MatrixXcd::Identity(7, 7)), 1e-14);
  // The truncated corner carries 1 − D.
  EXPECT_NEAR(comm(7, 7).real(), -7.0, 1e-14);
}

TEST(fock, expm_matches_diagonal_and_nilpotent_cases) {
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(3, 3);
  diag(0, 0) = Complex(0.0, 2.0);
  diag(1, 1) = -1.5;
  diag(2, 2) = Complex(40.0, -3.0);
  const Eigen::MatrixXcd e = gcs::expm(diag);
  for (int i = 0; i < 3; ++i) {
    EXPECT_LT(std::abs(e(i, i) - std::exp(diag(i, i))) / std::abs(std::exp(diag(i, i))), 1e-12);
  }
  // exp of a strictly upper-triangular 2×2 block is I + N.
  Eigen::MatrixXcd nil = Eigen::MatrixXcd::Zero(2, 2);
  nil(0, 1) = 7.0;
  const Eigen::MatrixXcd en = gcs::expm(nil);
  EXPECT_LT(std::abs(en(0, 1) - 7.0), 1e-13);
  EXPECT_LT(std::abs(en(0, 0) - 1.0), 1e-14);
}

TEST(fock, expm_action_agrees_with_expm) {
  std::mt19937 rng(7);
  std::normal_distribution<double> gauss;
  Eigen::MatrixXcd h(12, 12);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j) h(i, j) = Complex(gauss(rng), gauss(rng));
  h = (h + h.adjoint()).eval();
  Eigen::MatrixXcd v(12, 2);
  for (int i = 0; i < 12; ++i) v(i, 0) = gauss(rng), v(i, 1) = Complex(0, gauss(rng));
  const Eigen::MatrixXcd a = Complex(0.0, -0.8) * h;
  EXPECT_LT(max_abs(gcs::expm_action(a, v) - gcs::expm(a) * v), 1e-12);
}

TEST(fock, displacement_identity_at_zero) {
  const auto d = displacement_matrix(0.0, 15);
  EXPECT_EQ(max_abs(d.matrix() - Eigen::MatrixXcd::Identity(15, 15)), 0.0);
}

TEST(fock, displacement_vacuum_column_is_poisson) {
  const auto d = displacement_matrix(1.0, 40);
  for (int k = 0; k < 30; ++k) {
    const double expected = std::exp(-1.0) / static_cast<double>(factorial_ld(k));
    EXPECT_NEAR(std::norm(d.matrix()(k, 0)), expected, 1e-14) << "k=" << k;
    EXPECT_NEAR(std::abs(d.matrix()(k, 0)),
                std::exp(-0.5) / std::sqrt(static_cast<double>(factorial_ld(k))), 1e-14);
  }
}

TEST(fock, displacement_unitary_on_leading_block) {
  const auto d = displacement_matrix(Complex(2.0, 1.0), 60);
  const Eigen::MatrixXcd dd = d.matrix().adjoint() * d.matrix();
  EXPECT_LT(max_abs(dd.topLeftCorner(30, 30) - Eigen::MatrixXcd::Identity(30, 30)), 1e-10);
}

TEST(fock, displacement_composition_is_identity) {
  for (Complex alpha : {Complex(0.7, 0.0), Complex(-1.2, 2.0), Complex(0.0, 3.0)}) {
    const int dim = safe_dimension(std::abs(alpha)) + 30;
    const Eigen::MatrixXcd prod =
        displacement_matrix(alpha, dim).matrix() * displacement_matrix(-alpha, dim).matrix();
    const int block = safe_dimension(std::abs(alpha)) / 2;
    EXPECT_LT(max_abs(prod.topLeftCorner(block, block) -
                      Eigen::MatrixXcd::Identity(block, block)),
              1e-10)
        << alpha;
  }
}

TEST(fock, displacement_rejects_unsafe_dimension) {
  // |α|² + 6|α| + 10 = 100 + 60 + 10 = 170 for |α| = 10.
  EXPECT_THROW(displacement_matrix(10.0, 170), gcs::TruncationError);
  EXPECT_NO_THROW(displacement_matrix(10.0, 171));
  try {
    displacement_matrix(10.0, 120);
    FAIL();
  } catch (const gcs::TruncationError& e) {
    EXPECT_GT(e.tail_mass(), 0.0);
  }
  TruncationPolicy lax;
  lax.enforce = false;
  EXPECT_NO_THROW(displacement_matrix(10.0, 50, lax));
}

TEST(fock, gcs_vector_basics) {
  EXPECT_THROW(gcs_vector(3, 0.0, 10), gcs::TruncationError);
  const auto e3 = gcs_vector(3, 0.0, 20);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(e3[k], Complex(k == 3 ? 1.0 : 0.0, 0.0));

  const auto coherent = gcs_vector(0, 1.0, 40);
  for (int k = 0; k < 25; ++k) {
    EXPECT_NEAR(std::norm(coherent[k]), std::exp(-1.0) / static_cast<double>(factorial_ld(k)),
                1e-14);
  }
  EXPECT_THROW(gcs_vector(6, 0.5, 12), gcs::TruncationError);
}

TEST(fock, gcs_vector_norm_property) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> mag(0.0, 3.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_int_distribution<int> level(0, 5);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex alpha = std::polar(mag(rng), ang(rng));
    const int n = level(rng);
    const int dim = safe_dimension(std::abs(alpha), n);
    EXPECT_NEAR(gcs_vector(n, alpha, dim).norm(), 1.0, 1e-10) << alpha << " n=" << n;
  }
}

TEST(fock, expectation_examples) {
  const auto ops = ladder_matrices(80);
  EXPECT_NEAR(std::abs(expectation(ladder_matrices(10).number, FockVector::basis(3, 10)) - 3.0),
              0.0, 1e-15);
  EXPECT_NEAR(expectation(ops.number, gcs_vector(1, 3.0, 80)).real(), 10.0, 1e-8);
  const Complex alpha(1.1, -0.6);
  const auto v = gcs_vector(0, alpha, 40);
  EXPECT_LT(std::abs(expectation(ladder_matrices(40).annihilation, v) - alpha), 1e-9);
  EXPECT_THROW(expectation(ops.number, FockVector::basis(0, 10)), gcs::DomainError);
}

TEST(fock, expectation_rejects_heavy_tail) {
  Eigen::VectorXcd c = Eigen::VectorXcd::Ones(6);
  EXPECT_THROW(expectation(ladder_matrices(6).number, FockVector(c)), gcs::TruncationError);
}

TEST(fock, number_mean_and_variance_on_gcs) {
  const int dim = 100;
  const auto ops = ladder_matrices(dim);
  const ModeOperator n2 = ops.number * ops.number;
  for (int n = 0; n <= 5; ++n) {
    for (Complex alpha : {Complex(0.0, 0.0), Complex(0.5, 0.0), Complex(1.5, -1.0),
                          Complex(0.0, 3.0), Complex(-2.1, 2.1)}) {
      const auto v = gcs_vector(n, alpha, dim);
      const double mean = expectation(ops.number, v).real();
      const double var = expectation(n2, v).real() - mean * mean;
      EXPECT_NEAR(mean, n + std::norm(alpha), 1e-8);
      // ⟨n|(αa† + α*a)²|n⟩ = (2n+1)|α|².
      EXPECT_NEAR(var, (2 * n + 1) * std::norm(alpha), 1e-7);
    }
  }
}

TEST(fock, evolve_stationary_state) {
  const double omega = 1.3;
  const int dim = 12;
  const Eigen::MatrixXcd h0 = oscillator_hamiltonian(dim, omega).matrix();
  const auto e2 = FockVector::basis(2, dim, omega);
  const auto out = schrodinger_evolve([&](double) { return h0; }, e2, 0.0,
                                      2.0 * std::numbers::pi / omega, 50);
  // e^{−i 5π} = −1.
  EXPECT_NEAR(std::abs(out[2] - Complex(-1.0, 0.0)), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(inner(e2, out)), 1.0, 1e-8);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);
}

TEST(fock, evolve_constant_hamiltonian_self_convergence) {
  const int dim = 10;
  Eigen::MatrixXcd h = oscillator_hamiltonian(dim, 1.0).matrix() +
                       0.3 * position_operator(dim, 1.0).matrix();
  const auto v0 = FockVector::basis(1, dim);
  const auto one = schrodinger_evolve([&](double) { return h; }, v0, 0.0, 0.05, 1);
  const auto many = schrodinger_evolve([&](double) { return h; }, v0, 0.0, 0.05, 1000);
  EXPECT_LT((one.coeffs() - many.coeffs()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(fock, evolve_rejects_non_hermitian) {
  const int dim = 6;
  Eigen::MatrixXcd h = ladder_matrices(dim).annihilation.matrix();
  EXPECT_THROW(schrodinger_evolve([&](double) { return h; }, FockVector::basis(0, dim), 0.0,
                                  1.0, 4),
               gcs::DomainError);
  EXPECT_THROW(schrodinger_evolve([&](double) { return h; }, FockVector::basis(0, dim), 0.0,
                                  1.0, 0),
               gcs::DomainError);
}

TEST(fock, evolve_preserves_norm_time_dependent) {
  const int dim = 30;
  const Eigen::MatrixXcd h0 = oscillator_hamiltonian(dim, 1.0).matrix();
  const Eigen::MatrixXcd x = position_operator(dim, 1.0).matrix();
  const auto v0 = gcs_vector(1, Complex(0.5, 0.2), dim);
  const auto out = schrodinger_evolve(
      [&](double t) { return (h0 + std::sin(2.0 * t) * x).eval(); }, v0, 0.0, 5.0, 2000);
  EXPECT_NEAR(out.norm(), v0.norm(), 1e-8);
}

TEST(fock, free_evolution_phases) {
  const auto v = FockVector::basis(3, 5, 2.0);
  const auto out = free_evolution(v, 0.25);
  EXPECT_LT(std::abs(out[3] - std::polar(1.0, -3.5 * 2.0 * 0.25)), 1e-15);
}
