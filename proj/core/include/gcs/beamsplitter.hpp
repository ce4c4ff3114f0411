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

// A displaced number state |n,α⟩ entering arm 1 of a lossless beamsplitter,
// vacuum in arm 2. With a₃ = R a₁ + T a₂ and a₄ = T a₁ + R a₂ the output is
//
//   Σ_m √C(n,m) Rᵐ T^{n−m} |m, Rα⟩₃ |n−m, Tα⟩₄ ,
//
// i.e. n splits binomially like n photons while α splits like a coherent
// amplitude. Output arm states stay symbolic (Labels); expansion into the
// number basis is explicit.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gcs/states.hpp"

namespace gcs::beamsplitter {

struct Spec {
  Complex reflection{0.0, 0.0};
  Complex transmission{0.0, 0.0};

  /// R = i/√2, T = 1/√2.
  static Spec symmetric();
};

/// Residuals of the two lossless constraints.
struct ConstraintResiduals {
  double power;      // | |R|² + |T|² − 1 |
  double coherence;  // | RT* + TR* |
};

ConstraintResiduals residuals(const Spec& spec);

/// Returns `spec` unchanged if both residuals are ≤ 1e-12, otherwise throws
/// DomainError quoting the residuals.
Spec validate(const Spec& spec);

struct OutputTerm {
  int m = 0;
  Complex amplitude{0.0, 0.0};
  Label arm3;  // (m, Rα)
  Label arm4;  // (n−m, Tα)
};

/// The n+1 output terms, m = 0..n. `spec` is validated first.
std::vector<OutputTerm> split_gcs(int n, Complex alpha, const Spec& spec, double omega = 1.0);

/// Joint number-basis amplitudes c(j,k) = ⟨j|₃⟨k|₄ out⟩ for j,k < dim, built by
/// expanding every output term through the analytic number expansion.
/// Throws TruncationError if the joint norm differs from 1 by more than 1e-10.
Eigen::MatrixXcd two_mode_oracle(int n, Complex alpha, const Spec& spec, int dim);

/// The same joint amplitudes built independently: the binomial number-state
/// split is displaced by D₃(Rα) ⊗ D₄(Tα) using Fock-space matrix exponentials.
Eigen::MatrixXcd displaced_number_split(int n, Complex alpha, const Spec& spec, int dim);

/// Mean photon number in arm 3 (rows) and arm 4 (columns) of a joint matrix.
std::pair<double, double> arm_mean_photons(const Eigen::MatrixXcd& joint);

/// Amplitude matrix of the output over the arm-GCS bases: entry (m, n−m) holds
/// the amplitude of |m,Rα⟩₃|n−m,Tα⟩₄. Its rank is the Schmidt rank.
Eigen::MatrixXcd gcs_basis_amplitudes(const std::vector<OutputTerm>& terms);

}  // namespace gcs::beamsplitter
