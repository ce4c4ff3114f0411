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

// Special functions for the harmonic oscillator: Hermite and generalized
// Laguerre polynomials, normalized oscillator eigenfunctions, log-factorials.
//
// All routines are pure and use three-term recurrences. None of them is
// meant for arbitrary precision; the supported range is n ≤ 200 for the
// normalized eigenfunctions, which never form Hₙ or n! explicitly.

#pragma once

namespace gcs::specfun {

/// Physicists' Hermite polynomial Hₙ(z).
///
/// Overflows for large n·|z|; use eigenfunction() when the polynomial is
/// only needed inside a normalized oscillator state.
double hermite(int n, double z);

/// Generalized Laguerre polynomial L_k^{(m)}(z) for integer m ≥ 0.
double laguerre_assoc(int k, int m, double z);

/// Laguerre polynomial Lₙ(z).
double laguerre(int n, double z);

/// Normalized oscillator eigenfunction
///   φₙ(x) = (ω/π)^{1/4} (2ⁿ n!)^{-1/2} exp(-ωx²/2) Hₙ(√ω x).
/// Throws DomainError for ω ≤ 0.
double eigenfunction(int n, double omega, double x);

/// ln(n!). Exact integer product for n ≤ 20, log-gamma beyond.
double log_factorial(int n);

}  // namespace gcs::specfun
