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
#include <numbers>

#include "gtest/gtest.h"

#include "gcs/error.hpp"
#include "oracles.hpp"

using namespace gcs::specfun;
namespace oracle = gcs::testing;

TEST(specfun, hermite_low_orders) {
  EXPECT_EQ(hermite(0, 1.7), 1.0);
  EXPECT_EQ(hermite(1, 2.0), 4.0);
  // 32z⁵ − 160z³ + 120z at z = 1.3.
  EXPECT_NEAR(hermite(5, 1.3), -76.70624, 1e-11);
  EXPECT_NEAR(hermite(5, 1.3), oracle::hermite_explicit(5, 1.3), 1e-11);
}

TEST(specfun, laguerre_low_orders) {
  EXPECT_EQ(laguerre_assoc(0, 3, 0.5), 1.0);
  EXPECT_EQ(laguerre_assoc(1, 0, 2.0), -1.0);
  EXPECT_NEAR(laguerre_assoc(3, 2, 1.5), 0.0625, 1e-14);
  EXPECT_NEAR(laguerre_assoc(3, 2, 1.5), oracle::laguerre_explicit(3, 2, 1.5), 1e-14);

  EXPECT_EQ(laguerre(0, 7.3), 1.0);
  EXPECT_EQ(laguerre(1, 1.0), 0.0);
  EXPECT_NEAR(laguerre(4, 2.0), 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(laguerre(4, 2.0), oracle::laguerre_explicit(4, 0, 2.0), 1e-14);
}

TEST(specfun, recurrence_matches_explicit_sums) {
  for (int n = 0; n <= 12; ++n) {
    for (int iz = -30; iz <= 30; ++iz) {
      const double z = iz / 10.0;
      const double explicit_h = oracle::hermite_explicit(n, z);
      EXPECT_LT(std::abs(hermite(n, z) - explicit_h) / std::max(1.0, std::abs(explicit_h)),
                1e-12)
          << "n=" << n << " z=" << z;
      for (int m = 0; m <= 6; ++m) {
        const double explicit_l = oracle::laguerre_explicit(n, m, z);
        EXPECT_LT(std::abs(laguerre_assoc(n, m, z) - explicit_l) /
                      std::max(1.0, std::abs(explicit_l)),
                  1e-12)
            << "k=" << n << " m=" << m << " z=" << z;
      }
    }
  }
}

TEST(specfun, eigenfunction_values) {
  EXPECT_NEAR(eigenfunction(0, 1.0, 0.0), std::pow(std::numbers::pi, -0.25), 1e-15);
  EXPECT_NEAR(eigenfunction(0, 1.0, 0.0), 0.7511255444649425, 1e-15);
  EXPECT_EQ(eigenfunction(1, 1.0, 0.0), 0.0);
  // Frozen from a 40-digit evaluation of the closed form.
  EXPECT_NEAR(eigenfunction(7, 2.0, 0.9), 0.49128760250642851, 1e-13);
  EXPECT_NEAR(eigenfunction(7, 2.0, 0.9), oracle::eigenfunction_direct(7, 2.0, 0.9), 1e-13);
}

TEST(specfun, eigenfunction_rejects_nonpositive_omega) {
  EXPECT_THROW(eigenfunction(0, 0.0, 1.0), gcs::DomainError);
  EXPECT_THROW(eigenfunction(0, -1.0, 1.0), gcs::DomainError);
  EXPECT_THROW(hermite(-1, 1.0), gcs::DomainError);
  EXPECT_THROW(laguerre_assoc(2, -1, 1.0), gcs::DomainError);
}

TEST(specfun, eigenfunction_matches_direct_formula_small_n) {
  for (int n = 0; n <= 20; ++n) {
    for (double x : {-3.1, -0.4, 0.0, 0.7, 2.5}) {
      EXPECT_NEAR(eigenfunction(n, 1.3, x), oracle::eigenfunction_direct(n, 1.3, x), 1e-12)
          << "n=" << n << " x=" << x;
    }
  }
}

TEST(specfun, eigenfunction_finite_up_to_n200) {
  for (int n : {150, 170, 200}) {
    for (double x : {0.0, 5.0, 19.9, 20.1, 25.0}) {
      const double v = eigenfunction(n, 1.0, x);
      EXPECT_TRUE(std::isfinite(v)) << "n=" << n << " x=" << x;
      EXPECT_LT(std::abs(v), 1.0);
    }
  }
}

TEST(specfun, eigenfunction_orthonormal) {
  // Simpson, 4096 panels over ±12/√ω.
  for (double omega : {1.0, 2.5}) {
    const double half = 12.0 / std::sqrt(omega);
    for (int n = 0; n <= 20; ++n) {
      for (int m = n; m <= 20; ++m) {
        const double integral = oracle::simpson_fn(
            [&](double x) { return eigenfunction(n, omega, x) * eigenfunction(m, omega, x); },
            -half, half, 4096);
        EXPECT_NEAR(integral, n == m ? 1.0 : 0.0, 1e-8) << "n=" << n << " m=" << m;
      }
    }
  }
}

TEST(specfun, eigenfunction_parity) {
  for (int n = 0; n <= 30; ++n) {
    for (double x : {0.3, 1.1, 2.9, 4.4}) {
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      EXPECT_NEAR(eigenfunction(n, 1.7, -x), sign * eigenfunction(n, 1.7, x), 1e-14);
    }
  }
}

TEST(specfun, log_factorial) {
  EXPECT_EQ(log_factorial(0), 0.0);
  EXPECT_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(5), std::log(120.0), 1e-15);
  EXPECT_NEAR(log_factorial(5), 4.7874917427820458, 1e-14);
  EXPECT_NEAR(log_factorial(170), 706.57306224578735, 1e-10);
  EXPECT_NEAR(log_factorial(170), oracle::log_factorial_sum(170), 1e-10);
  double prev = -1.0;
  for (int n = 0; n <= 300; ++n) {
    const double v = log_factorial(n);
    EXPECT_GE(v, prev);
    prev = v;
  }
}
