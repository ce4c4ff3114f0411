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

// Truncated Fock-space representation of a single bosonic mode.
//
// Everything here is a canonical t = 0 representation: ladder matrices carry
// no e^{∓iωt} phases and displacement amplitudes are taken as given. Callers
// that work at time t fold the phase into α (α → α e^{-iωt}) or apply
// free_evolution() explicitly.
//
// The truncation rule of thumb is D ≥ |α|² + 6|α| + 10 + 2n, which keeps the
// omitted Poisson-like tail below 1e-12. Operations check it up front and
// throw TruncationError unless the policy disables enforcement.

#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace gcs::fock {

using Complex = std::complex<double>;

/// How strictly truncation preconditions are enforced.
struct TruncationPolicy {
  bool enforce = true;
  /// Largest |c_{D-1}|² accepted before a vector is used in expectations.
  double tail_tolerance = 1e-12;
};

/// A D×D operator on the truncated single-mode space.
class ModeOperator {
 public:
  explicit ModeOperator(Eigen::MatrixXcd matrix);

  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }
  int dim() const noexcept { return static_cast<int>(matrix_.rows()); }

  friend ModeOperator operator*(const ModeOperator& lhs, const ModeOperator& rhs);

 private:
  Eigen::MatrixXcd matrix_;
};

/// Number-basis coefficients c₀…c_{D−1} of a single-mode state.
class FockVector {
 public:
  explicit FockVector(Eigen::VectorXcd coeffs, double omega = 1.0);

  /// The number state |k⟩ in a D-dimensional space.
  static FockVector basis(int k, int dim, double omega = 1.0);

  const Eigen::VectorXcd& coeffs() const noexcept { return coeffs_; }
  int dim() const noexcept { return static_cast<int>(coeffs_.size()); }
  double omega() const noexcept { return omega_; }
  double norm() const { return coeffs_.norm(); }
  /// Probability in the highest retained level, |c_{D−1}|².
  double tail_mass() const { return std::norm(coeffs_[coeffs_.size() - 1]); }
  Complex operator[](int k) const { return coeffs_[k]; }

 private:
  Eigen::VectorXcd coeffs_;
  double omega_;
};

struct LadderOperators {
  ModeOperator annihilation;
  ModeOperator creation;
  ModeOperator number;
};

/// Smallest dimension satisfying the truncation rule for (|α|, n).
int safe_dimension(double abs_alpha, int n = 0);

/// a[k−1,k] = √k, a† = a^H, N = a†a. Throws DomainError for D < 2.
///
/// The truncated pair satisfies [a, a†] = 1 only on the leading
/// (D−1)×(D−1) block; the last diagonal entry of the commutator is 1 − D.
LadderOperators ladder_matrices(int dim);

/// exp(α a† − α* a) via scaling-and-squaring.
ModeOperator displacement_matrix(Complex alpha, int dim, const TruncationPolicy& policy = {});

/// D(α)|n⟩, i.e. column n of displacement_matrix(α, D).
FockVector gcs_vector(int n, Complex alpha, int dim, const TruncationPolicy& policy = {},
                      double omega = 1.0);

/// ⟨v|op|v⟩ / ⟨v|v⟩. Rejects mismatched dimensions and vectors whose tail mass
/// exceeds the policy tolerance.
Complex expectation(const ModeOperator& op, const FockVector& v,
                    const TruncationPolicy& policy = {});

/// ⟨u|v⟩ (antilinear in the first argument).
Complex inner(const FockVector& u, const FockVector& v);

/// x̂ = (a + a†)/√(2ω).
ModeOperator position_operator(int dim, double omega);

/// p̂ = −i√(ω/2)(a − a†).
ModeOperator momentum_operator(int dim, double omega);

/// Single-mode field operator (a e^{iφ} + a† e^{−iφ})/√(2ω) with φ = kx + π/2.
ModeOperator field_operator(int dim, double omega, double kx);

/// Quadratures with Ê = (2/√ω)[X̂ cos(kx+π/2) + Ŷ sin(kx+π/2)]:
/// X̂ = (a + a†)/(2√2), Ŷ = i(a − a†)/(2√2).
std::pair<ModeOperator, ModeOperator> quadrature_operators(int dim);

/// H₀ = ω(N + ½) as a diagonal matrix.
ModeOperator oscillator_hamiltonian(int dim, double omega);

/// e^{−iH₀t}|v⟩: multiplies c_k by e^{−i(k+½)ωt}.
FockVector free_evolution(const FockVector& v, double t);

/// Time-dependent Hamiltonian in the number basis.
using HamiltonianFn = std::function<Eigen::MatrixXcd(double)>;

/// Integrates i dv/dt = H(t) v from t0 to t1 with the exponential midpoint
/// rule: each step applies exp(−i H(t_mid) Δt). Every H(t_mid) is checked for
/// Hermiticity (max |H − H^H| ≤ 1e-10) and rejected with DomainError otherwise.
FockVector schrodinger_evolve(const HamiltonianFn& hamiltonian, const FockVector& v0,
                              double t0, double t1, int steps);

/// Block form of schrodinger_evolve: evolves every column of `states`.
Eigen::MatrixXcd schrodinger_evolve_block(const HamiltonianFn& hamiltonian,
                                          const Eigen::MatrixXcd& states, double t0,
                                          double t1, int steps);

}  // namespace gcs::fock
