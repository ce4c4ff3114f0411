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

// Oscillator driven by a classical force, H = H₀ + f(t) x̂.
//
// The propagator from t₀ to t factorizes as
//
//   U(t,t₀) = e^{iβ} exp[ζ a† e^{−iωt} − ζ* a e^{iωt}] e^{−iH₀(t−t₀)},
//   ζ = −(i/√(2ω)) ∫ f(t′) e^{iωt′} dt′,
//   β = (1/2ω) ∫∫_{t″<t′} f(t′) f(t″) sin ω(t′−t″),
//
// so a number state |n⟩ at t₀ ends up as the displaced number state with
// label (n, ζ) evaluated at t, up to a global phase.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gcs/fock.hpp"
#include "gcs/states.hpp"

namespace gcs::drive {

struct Gaussian {
  double amplitude = 1.0;
  double center = 0.0;
  double width = 1.0;
};

/// Constant force over the whole window.
struct Rectangular {
  double amplitude = 1.0;
};

/// amplitude · sin(frequency · t + phase) over the window.
struct SinusoidalBurst {
  double amplitude = 1.0;
  double frequency = 1.0;
  double phase = 0.0;
};

/// Uniformly spaced samples, linearly interpolated; zero outside the table.
struct SampleTable {
  double start = 0.0;
  double spacing = 1.0;
  std::vector<double> samples;
};

using Shape = std::variant<Gaussian, Rectangular, SinusoidalBurst, SampleTable>;

/// A real force f(t) switched on over [t0, t1]; a sum of registered shapes.
class Pulse {
 public:
  Pulse(Shape shape, double t0, double t1);

  static Pulse zero(double t0, double t1);
  /// Window spans the table exactly.
  static Pulse from_table(SampleTable table);

  double operator()(double t) const;
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  const std::vector<Shape>& components() const noexcept { return components_; }

  /// Points in [t0, t1] where f may have a kink (window ends, table nodes).
  std::vector<double> breakpoints() const;

  Pulse scaled(double factor) const;
  friend Pulse operator+(const Pulse& lhs, const Pulse& rhs);

 private:
  Pulse(std::vector<Shape> components, double t0, double t1);

  std::vector<Shape> components_;
  double t0_;
  double t1_;
};

/// Registry used by the command line: "zero", "gaussian" (amplitude, center,
/// width), "rectangular" (amplitude), "sinusoidal" (amplitude, frequency,
/// phase). Unknown names or parameter keys throw DomainError; missing keys
/// take the struct defaults.
Pulse make_pulse(std::string_view name, const std::map<std::string, double>& params,
                 double t0, double t1);

/// Names accepted by make_pulse().
std::vector<std::string> pulse_names();

/// ζ(t, t₀) by adaptive Gauss-Kronrod quadrature (absolute tolerance 1e-10,
/// at most 2²⁰ panels). Throws ConvergenceError with the achieved estimate.
Complex zeta(const Pulse& pulse, double omega, double t);

/// β(t, t₀) from one adaptive ODE sweep that carries the running integral
/// ∫ f e^{−iωt″} dt″ alongside the phase.
double beta_phase(const Pulse& pulse, double omega, double t);

struct SweepResult {
  Complex zeta;
  double beta;
};

/// ζ and β from the same ODE sweep. ζ here is an independent route to zeta().
SweepResult integrate_drive(const Pulse& pulse, double omega, double t);

/// Propagator over the full window as a D×D matrix. Throws TruncationError
/// unless D > |ζ|² + 6|ζ| + 10.
fock::ModeOperator time_development(const Pulse& pulse, double omega, int dim);

struct DrivenState {
  fock::FockVector state;  // U(t₁,t₀)|n⟩
  Label predicted;          // (n, ζ(t₁,t₀), ω), read at time t₁
  Complex zeta;
  double beta;
  /// |⟨predicted(t₁)|state⟩|, i.e. agreement up to a global phase.
  double fidelity;
};

DrivenState drive_number_state(int n, const Pulse& pulse, double omega, int dim);

/// H(t) = ω(N + ½) + f(t) x̂ in the truncated number basis.
fock::HamiltonianFn driven_hamiltonian(const Pulse& pulse, double omega, int dim);

}  // namespace gcs::drive
