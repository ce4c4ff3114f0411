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

// Closed-form properties of displaced number states |n,α⟩ = D(α)|n⟩ of the
// oscillator H = p²/2 + ω²x²/2 (ħ = m = 1).
//
// Time convention: a Label is time independent. The state at time t is
// e^{−iH t}|n,α⟩, so number-basis coefficients pick up e^{−i(k+½)ωt} and the
// mean position follows √(2/ω)|α|cos(ωt − θ) with α = |α|e^{iθ}.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "gcs/grid.hpp"

namespace gcs {

using Complex = std::complex<double>;

/// Identity of a displaced number state: nodal number n, amplitude α and
/// oscillator frequency ω.
struct Label {
  int n = 0;
  Complex alpha{0.0, 0.0};
  double omega = 1.0;

  /// Throws DomainError if n < 0 or ω ≤ 0.
  void validate() const;
};

// --- Trajectories and wavefunction -------------------------------------

/// ⟨x̂⟩(t) = √(2/ω)|α|cos(ωt − θ).
double position_expectation(const Label& label, double t);

/// ⟨p̂⟩(t) = −√(2ω)|α|sin(ωt − θ).
double momentum_expectation(const Label& label, double t);

/// ψ(x,t) = φₙ(x − ⟨x̂⟩) exp(i[−(n+½)ωt + x⟨p̂⟩ − ½⟨x̂⟩⟨p̂⟩]).
Complex wavefunction(const Label& label, double x, double t);

/// |ψ(x,t)|² sampled on `grid`.
std::vector<double> density_grid(const Label& label, const SpatialGrid& grid, double t);

/// ±(√(2/ω)|α| + 8/√ω) with 2048 points: the turning points plus eight
/// ground-state widths.
SpatialGrid default_grid(const Label& label);

// --- Electric field ------------------------------------------------------

/// ⟨Ê(x)⟩ = √(2/ω)|α|cos(kx − ωt + θ + π/2).
double field_expectation(const Label& label, double kx, double t);

/// (ΔE)² = (2n+1)/(2ω), independent of α, x and t.
double field_variance(int n, double omega);

/// Variances of the quadratures X̂, Ŷ of Ê = (2/√ω)[X̂ cos(kx+π/2) + Ŷ sin(kx+π/2)].
/// Both equal (2n+1)/8 for every α.
std::pair<double, double> quadrature_variances(int n);

/// Field probability density P(E) over a (kx, E) grid at time t.
///
/// The field distribution is the position distribution with ωt replaced by
/// ωt − kx − π/2: P(E) = φₙ(E − ⟨Ê⟩(kx,t))², with E measured in the same
/// units as position.
struct FieldDensity {
  std::vector<double> phases;  // kx samples [rad]
  std::vector<double> fields;  // E samples
  std::vector<double> values;  // row-major, one row per phase

  double at(std::size_t phase_index, std::size_t field_index) const {
    return values[phase_index * fields.size() + field_index];
  }
};

FieldDensity field_density_grid(const Label& label, const SpatialGrid& phase_grid,
                                const SpatialGrid& field_grid, double t);

// --- Overlaps and completeness --------------------------------------------

/// ⟨n,β|n,α⟩ = exp(−(|α|² + |β|² − 2αβ*)/2) Lₙ(|α − β|²).
Complex overlap(int n, Complex beta, Complex alpha);

/// |⟨n,α|m,α⟩ − δₙₘ| evaluated on the Fock oracle.
double orthonormality_check(int n, int m, Complex alpha);

/// max |Σ_{n<N} |n,α⟩⟨n,α| − I| over the first `window` number states,
/// evaluated on the Fock oracle.
double completeness_defect(Complex alpha, int terms, int window);

/// max |(1/π)∫d²α |n,α⟩⟨n,α| − I| over the first `window` number states, with
/// the integral cut to |α| ≤ radius and done by a polar midpoint rule.
/// This is a coarse check; the cut-off and the grid both leave O(1e-3) errors.
double overcompleteness_defect(int n, double radius, int radial_points, int angular_points,
                               int window);

// --- Number-state expansion and photon statistics --------------------------

/// ⟨k|n,α⟩ at t = 0.
///
/// Uses s = min(n,k), d = |n−k| so the Laguerre upper index is never
/// negative; the magnitude is accumulated in log space.
Complex expansion_coefficient(int n, Complex alpha, int k);

/// ⟨k|n,α⟩ for k = 0..k_max. Throws TruncationError if the coefficients carry
/// less than 1 − 1e-10 of the probability.
std::vector<Complex> number_expansion(int n, Complex alpha, int k_max);

/// Pₖ(n,α) = (k!/n!) e^{−|α|²} |α|^{2(n−k)} [L_k^{n−k}(|α|²)]².
double photon_probability(int n, Complex alpha, int k);

struct PhotonDistribution {
  std::vector<double> probs;
  int n = 0;
  Complex alpha{0.0, 0.0};

  /// 1 − Σ pₖ: the weight beyond the last computed k.
  double deficit() const;
};

PhotonDistribution photon_distribution(int n, Complex alpha, int k_max);

double mean_photon(int n, Complex alpha);
double photon_variance(int n, Complex alpha);
/// ΔN/⟨N⟩ = |α|/(n + |α|²). Throws DomainError for the vacuum.
double fractional_uncertainty(int n, Complex alpha);

// --- Second-order coherence ------------------------------------------------

/// g⁽²⁾ = 1 − n/(n + |α|²)². Throws DomainError for the vacuum.
double g2(int n, Complex alpha);

/// argmin over n ∈ [0, n_max] of g2(n, α) by direct scan; the vacuum is
/// skipped and exact ties go to the smaller n. Requires n_max > |α|².
int g2_argmin_over_n(Complex alpha, int n_max);

}  // namespace gcs
