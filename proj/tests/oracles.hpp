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

// Reference computations used only by tests. Nothing here calls into the
// library code path it is compared against.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace gcs::testing {

inline long double factorial_ld(int n) {
  long double out = 1.0L;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

inline long double binomial_ld(int n, int k) {
  if (k < 0 || k > n) return 0.0L;
  long double out = 1.0L;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

/// Hₙ(z) = Σₘ n! (−1)ᵐ (2z)^{n−2m} / (m! (n−2m)!).
inline double hermite_explicit(int n, double z) {
  long double sum = 0.0L;
  for (int m = 0; 2 * m <= n; ++m) {
    const long double term = factorial_ld(n) / (factorial_ld(m) * factorial_ld(n - 2 * m)) *
                             std::pow(2.0L * z, n - 2 * m);
    sum += (m % 2 == 0 ? term : -term);
  }
  return static_cast<double>(sum);
}

/// L_k^m(z) = Σⱼ (−1)ʲ C(k+m, k−j) zʲ / j!.
inline double laguerre_explicit(int k, int m, double z) {
  long double sum = 0.0L;
  for (int j = 0; j <= k; ++j) {
    const long double term =
        binomial_ld(k + m, k - j) * std::pow(static_cast<long double>(z), j) / factorial_ld(j);
    sum += (j % 2 == 0 ? term : -term);
  }
  return static_cast<double>(sum);
}

/// Direct normalized eigenfunction; only valid where nothing overflows.
inline double eigenfunction_direct(int n, double omega, double x) {
  const long double norm = std::pow(omega / std::numbers::pi_v<long double>, 0.25L) /
                           std::sqrt(std::pow(2.0L, n) * factorial_ld(n));
  return static_cast<double>(norm * std::exp(-0.5L * omega * x * x) *
                             hermite_explicit(n, std::sqrt(omega) * x));
}

inline double log_factorial_sum(int n) {
  long double sum = 0.0L;
  for (int k = 2; k <= n; ++k) sum += std::log(static_cast<long double>(k));
  return static_cast<double>(sum);
}

/// Composite Simpson on [a, b] with an even number of panels.
template <class F>
auto simpson_fn(F&& f, double a, double b, int panels) {
  const double h = (b - a) / panels;
  auto sum = f(a) + f(b);
  for (int i = 1; i < panels; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * (h / 3.0);
}

/// ∫ f e^{iωt} dt by trapezoid at N and 2N panels with Richardson extrapolation.
inline std::complex<double> fourier_richardson(const std::function<double(double)>& f,
                                               double omega, double a, double b, int panels) {
  auto trap = [&](int n) {
    const double h = (b - a) / n;
    std::complex<double> sum = 0.5 * (f(a) * std::polar(1.0, omega * a) +
                                      f(b) * std::polar(1.0, omega * b));
    for (int i = 1; i < n; ++i) {
      const double t = a + i * h;
      sum += f(t) * std::polar(1.0, omega * t);
    }
    return sum * h;
  };
  return (4.0 * trap(2 * panels) - trap(panels)) / 3.0;
}

/// (1/2ω) ∫ dt′ f(t′) ∫_{a}^{t′} dt″ f(t″) sin ω(t′−t″) by nested Simpson.
inline double beta_nested(const std::function<double(double)>& f, double omega, double a,
                          double b, int panels) {
  auto inner = [&](double tp) {
    if (tp <= a) return 0.0;
    return simpson_fn([&](double tpp) { return f(tpp) * std::sin(omega * (tp - tpp)); }, a, tp,
                      panels);
  };
  return simpson_fn([&](double tp) { return f(tp) * inner(tp); }, a, b, panels) /
         (2.0 * omega);
}

/// Real roots of Hₙ by bisection on sign changes of the explicit sum.
inline std::vector<double> hermite_roots(int n) {
  std::vector<double> roots;
  const double span = std::sqrt(2.0 * n + 1.0) + 1.0;
  const int samples = 4000;
  double prev_x = -span;
  double prev_v = hermite_explicit(n, prev_x);
  for (int i = 1; i <= samples; ++i) {
    const double x = -span + 2.0 * span * i / samples;
    const double v = hermite_explicit(n, x);
    if (v == 0.0) {
      roots.push_back(x);
    } else if ((prev_v < 0.0) != (v < 0.0) && prev_v != 0.0) {
      double lo = prev_x;
      double hi = x;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((hermite_explicit(n, mid) < 0.0) == (hermite_explicit(n, lo) < 0.0)) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_v = v;
  }
  return roots;
}

/// max |i∂ₜψ − (−½∂ₓ² + ½ω²x²)ψ| / max|ψ| over the (x, t) samples, with
/// fourth-order central differences of step h in both x and t.
template <class Psi>
double schrodinger_residual(Psi&& psi, double omega, const std::vector<double>& xs,
                            const std::vector<double>& ts, double h) {
  using C = std::complex<double>;
  double worst = 0.0;
  double peak = 0.0;
  for (double t : ts) {
    for (double x : xs) {
      const C center = psi(x, t);
      const C dt = (-psi(x, t + 2 * h) + 8.0 * psi(x, t + h) - 8.0 * psi(x, t - h) +
                    psi(x, t - 2 * h)) /
                   (12.0 * h);
      const C dxx = (-psi(x + 2 * h, t) + 16.0 * psi(x + h, t) - 30.0 * center +
                     16.0 * psi(x - h, t) - psi(x - 2 * h, t)) /
                    (12.0 * h * h);
      const C residual = C(0.0, 1.0) * dt - (-0.5 * dxx + 0.5 * omega * omega * x * x * center);
      worst = std::max(worst, std::abs(residual));
      peak = std::max(peak, std::abs(center));
    }
  }
  return worst / peak;
}

}  // namespace gcs::testing
