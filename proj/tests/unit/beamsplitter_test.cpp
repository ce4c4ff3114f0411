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
#include <random>

#include "gtest/gtest.h"

#include "gcs/error.hpp"
#include "gcs/fock.hpp"
#include "oracles.hpp"

using namespace gcs;
using namespace gcs::beamsplitter;
namespace oracle = gcs::testing;

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Spec random_spec(std::mt19937& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> mix(0.0, std::numbers::pi / 2.0);
  const double theta = mix(rng);
  const double phi_t = angle(rng);
  // RT* + TR* = 0 requires the phase difference to be ±π/2.
  const double sign = rng() % 2 == 0 ? 1.0 : -1.0;
  return Spec{std::polar(std::sin(theta), phi_t + sign * std::numbers::pi / 2.0),
              std::polar(std::cos(theta), phi_t)};
}

}  // namespace

TEST(beamsplitter, validate_examples) {
  EXPECT_NO_THROW(validate(Spec::symmetric()));
  EXPECT_NO_THROW(validate(Spec{1.0, 0.0}));
  EXPECT_THROW(validate(Spec{kInvSqrt2, kInvSqrt2}), DomainError);
  EXPECT_NEAR(residuals(Spec{kInvSqrt2, kInvSqrt2}).coherence, 1.0, 1e-15);
  EXPECT_THROW(validate(Spec{0.5, 0.5}), DomainError);
}

TEST(beamsplitter, split_examples) {
  const auto s = Spec::symmetric();
  const Complex alpha(1.1, -0.3);

  const auto zero = split_gcs(0, alpha, s);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].amplitude, Complex(1.0, 0.0));
  EXPECT_EQ(zero[0].arm3.n, 0);
  EXPECT_EQ(zero[0].arm4.n, 0);
  EXPECT_EQ(zero[0].arm3.alpha, s.reflection * alpha);
  EXPECT_EQ(zero[0].arm4.alpha, s.transmission * alpha);

  const auto one = split_gcs(1, alpha, s);
  ASSERT_EQ(one.size(), 2u);
  // Terms are ordered by m, the photon count sent to arm 3.
  EXPECT_LT(std::abs(one[0].amplitude - s.transmission), 1e-15);
  EXPECT_EQ(one[0].arm3.n, 0);
  EXPECT_EQ(one[0].arm4.n, 1);
  EXPECT_LT(std::abs(one[1].amplitude - s.reflection), 1e-15);
  EXPECT_EQ(one[1].arm3.n, 1);
  EXPECT_EQ(one[1].arm4.n, 0);

  const auto two = split_gcs(2, 0.0, s);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_NEAR(std::norm(two[0].amplitude), 0.25, 1e-15);
  EXPECT_NEAR(std::norm(two[1].amplitude), 0.5, 1e-15);
  EXPECT_NEAR(std::norm(two[2].amplitude), 0.25, 1e-15);
  EXPECT_LT(std::abs(two[2].amplitude - Complex(-0.5, 0.0)), 1e-15);
  EXPECT_LT(std::abs(two[1].amplitude - Complex(0.0, kInvSqrt2)), 1e-15);
}

TEST(beamsplitter, norm_conservation) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Spec s = random_spec(rng);
    ASSERT_NO_THROW(validate(s));
    for (int n = 0; n <= 10; ++n) {
      double total = 0.0;
      for (const auto& t : split_gcs(n, Complex(0.3, 0.2), s)) total += std::norm(t.amplitude);
      EXPECT_NEAR(total, 1.0, 1e-12);
    }
  }
}

TEST(beamsplitter, reduces_to_number_state_splitting) {
  const auto s = Spec::symmetric();
  for (int n = 0; n <= 5; ++n) {
    const auto joint = two_mode_oracle(n, 0.0, s, n + 2);
    for (int j = 0; j < n + 2; ++j) {
      for (int k = 0; k < n + 2; ++k) {
        Complex expected(0.0, 0.0);
        if (j + k == n) {
          expected = std::sqrt(static_cast<double>(oracle::binomial_ld(n, j))) *
                     std::pow(s.reflection, j) * std::pow(s.transmission, k);
        }
        EXPECT_LT(std::abs(joint(j, k) - expected), 1e-14) << n << " " << j << " " << k;
      }
    }
  }
}

TEST(beamsplitter, oracle_examples) {
  const auto s = Spec::symmetric();
  // Product of Poissons.
  const auto joint = two_mode_oracle(0, 1.0, s, 30);
  const double m3 = std::norm(s.reflection);
  const double m4 = std::norm(s.transmission);
  for (int j = 0; j < 12; ++j) {
    for (int k = 0; k < 12; ++k) {
      const double p = std::exp(-m3 - m4) * std::pow(m3, j) * std::pow(m4, k) /
                       static_cast<double>(oracle::factorial_ld(j) * oracle::factorial_ld(k));
      EXPECT_NEAR(std::norm(joint(j, k)), p, 1e-14);
    }
  }

  // Marginal means.
  for (int n = 0; n <= 3; ++n) {
    const Complex alpha(1.2, 0.7);
    const auto [mean3, mean4] = arm_mean_photons(two_mode_oracle(n, alpha, s, 45));
    EXPECT_NEAR(mean3, std::norm(s.reflection * alpha) + n * std::norm(s.reflection), 1e-10);
    EXPECT_NEAR(mean4, std::norm(s.transmission * alpha) + n * std::norm(s.transmission), 1e-10);
  }

  // Pass-through.
  const Complex alpha(0.4, -1.0);
  const auto pass = two_mode_oracle(2, alpha, Spec{1.0, 0.0}, 40);
  const auto input = fock::gcs_vector(2, alpha, 40).coeffs();
  for (int j = 0; j < 40; ++j) {
    EXPECT_LT(std::abs(pass(j, 0) - input[j]), 1e-12);
    for (int k = 1; k < 40; ++k) EXPECT_EQ(pass(j, k), Complex(0.0, 0.0));
  }

  EXPECT_THROW(two_mode_oracle(2, 3.0, s, 8), TruncationError);
}

TEST(beamsplitter, displacement_factorization) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> mag(0.0, 2.0);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int trial = 0; trial < 6; ++trial) {
    const Spec s = trial == 0 ? Spec::symmetric() : random_spec(rng);
    const Complex alpha = std::polar(mag(rng), ang(rng));
    for (int n = 0; n <= 3; ++n) {
      const int dim = 40;
      const auto analytic = two_mode_oracle(n, alpha, s, dim);
      const auto direct = displaced_number_split(n, alpha, s, dim);
      const int window = 25;
      const double diff = (analytic.topLeftCorner(window, window).cwiseAbs2() -
                           direct.topLeftCorner(window, window).cwiseAbs2())
                              .cwiseAbs()
                              .maxCoeff();
      EXPECT_LT(diff, 1e-9) << "trial " << trial << " n=" << n;
      // Amplitudes agree too, not only probabilities.
      EXPECT_LT((analytic - direct).topLeftCorner(window, window).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(beamsplitter, output_is_entangled) {
  const auto s = Spec::symmetric();
  for (int n = 1; n <= 5; ++n) {
    for (Complex alpha : {Complex(0.0, 0.0), Complex(1.5, -0.5)}) {
      const auto c = gcs_basis_amplitudes(split_gcs(n, alpha, s));
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
      int rank = 0;
      for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > 1e-12) ++rank;
      EXPECT_EQ(rank, n + 1);
      // Some 2×2 minor is nonzero.
      const Complex minor = c(0, n) * c(1, n - 1) - c(0, n - 1) * c(1, n);
      EXPECT_GT(std::abs(minor), 1e-6);
    }
  }
  const auto c0 = gcs_basis_amplitudes(split_gcs(0, 1.0, s));
  EXPECT_EQ(c0.rows(), 1);
}
