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

#include "gcs/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "gcs/error.hpp"
#include "gcs/fock.hpp"
#include "gcs/specfun.hpp"

namespace gcs {
namespace {

using std::numbers::pi;

constexpr double kExpansionMassTolerance = 1e-10;

// ln|⟨k|n,α⟩| and the unit phase of the coefficient, for α ≠ 0.
struct LogCoefficient {
  double log_magnitude;  // -inf for an exact zero
  Complex phase;
};

LogCoefficient log_coefficient(int n, Complex alpha, int k) {
  const double x = std::norm(alpha);
  const int s = std::min(n, k);
  const int d = std::abs(n - k);
  const double lag = specfun::laguerre_assoc(s, d, x);
  if (lag == 0.0) {
    return {-std::numeric_limits<double>::infinity(), Complex(1.0, 0.0)};
  }
  const double log_mag = 0.5 * (specfun::log_factorial(s) - specfun::log_factorial(s + d)) -
                         0.5 * x + d * std::log(std::abs(alpha)) + std::log(std::abs(lag));
  const double theta = std::arg(alpha);
  // k ≥ n: α^d L_n^d;  k < n: (−α*)^d L_k^d.
  Complex phase = k >= n ? std::polar(1.0, d * theta) : std::polar(1.0, -d * theta);
  if (k < n && d % 2 == 1) phase = -phase;
  if (lag < 0.0) phase = -phase;
  return {log_mag, phase};
}

void require_n(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative n");
}

}  // namespace

void Label::validate() const {
  if (n < 0) throw DomainError("Label: n must be non-negative");
  if (!(omega > 0.0)) throw DomainError("Label: omega must be positive");
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw DomainError("Label: alpha must be finite");
  }
}

double position_expectation(const Label& label, double t) {
  return std::sqrt(2.0 / label.omega) * std::abs(label.alpha) *
         std::cos(label.omega * t - std::arg(label.alpha));
}

double momentum_expectation(const Label& label, double t) {
  return -std::sqrt(2.0 * label.omega) * std::abs(label.alpha) *
         std::sin(label.omega * t - std::arg(label.alpha));
}

Complex wavefunction(const Label& label, double x, double t) {
  const double xc = position_expectation(label, t);
  const double pc = momentum_expectation(label, t);
  const double amplitude = specfun::eigenfunction(label.n, label.omega, x - xc);
  const double phase = -(label.n + 0.5) * label.omega * t + x * pc - 0.5 * xc * pc;
  return std::polar(amplitude, phase);
}

std::vector<double> density_grid(const Label& label, const SpatialGrid& grid, double t) {
  label.validate();
  const double xc = position_expectation(label, t);
  std::vector<double> out(grid.points());
  for (int i = 0; i < grid.points(); ++i) {
    const double phi = specfun::eigenfunction(label.n, label.omega, grid[i] - xc);
    out[i] = phi * phi;
  }
  return out;
}

SpatialGrid default_grid(const Label& label) {
  label.validate();
  const double half_width = std::sqrt(2.0 / label.omega) * std::abs(label.alpha) +
                            8.0 / std::sqrt(label.omega);
  return SpatialGrid(-half_width, half_width, 2048);
}

double field_expectation(const Label& label, double kx, double t) {
  return std::sqrt(2.0 / label.omega) * std::abs(label.alpha) *
         std::cos(kx - label.omega * t + std::arg(label.alpha) + pi / 2.0);
}

double field_variance(int n, double omega) {
  require_n(n, "field_variance");
  if (!(omega > 0.0)) throw DomainError("field_variance: omega must be positive");
  return (2.0 * n + 1.0) / (2.0 * omega);
}

std::pair<double, double> quadrature_variances(int n) {
  require_n(n, "quadrature_variances");
  const double v = (2.0 * n + 1.0) / 8.0;
  return {v, v};
}

FieldDensity field_density_grid(const Label& label, const SpatialGrid& phase_grid,
                                const SpatialGrid& field_grid, double t) {
  label.validate();
  FieldDensity out;
  out.phases = phase_grid.values();
  out.fields = field_grid.values();
  out.values.resize(out.phases.size() * out.fields.size());
  for (std::size_t i = 0; i < out.phases.size(); ++i) {
    const double center = field_expectation(label, out.phases[i], t);
    for (std::size_t j = 0; j < out.fields.size(); ++j) {
      const double phi = specfun::eigenfunction(label.n, label.omega, out.fields[j] - center);
      out.values[i * out.fields.size() + j] = phi * phi;
    }
  }
  return out;
}

Complex overlap(int n, Complex beta, Complex alpha) {
  require_n(n, "overlap");
  const Complex exponent =
      -(std::norm(alpha) + std::norm(beta) - 2.0 * alpha * std::conj(beta)) / 2.0;
  return std::exp(exponent) * specfun::laguerre(n, std::norm(alpha - beta));
}

double orthonormality_check(int n, int m, Complex alpha) {
  require_n(n, "orthonormality_check");
  require_n(m, "orthonormality_check");
  const int dim = fock::safe_dimension(std::abs(alpha), std::max(n, m));
  const auto disp = fock::displacement_matrix(alpha, dim);
  const Complex ip = disp.matrix().col(n).dot(disp.matrix().col(m));
  return std::abs(ip - (n == m ? 1.0 : 0.0));
}

double completeness_defect(Complex alpha, int terms, int window) {
  if (terms < 1 || window < 1) {
    throw DomainError("completeness_defect: terms and window must be positive");
  }
  const int dim = std::max(fock::safe_dimension(std::abs(alpha), terms), window + 1);
  const auto disp = fock::displacement_matrix(alpha, dim);
  const auto cols = disp.matrix().leftCols(terms);
  const Eigen::MatrixXcd partial =
      cols.topRows(window) * cols.topRows(window).adjoint();
  return (partial - Eigen::MatrixXcd::Identity(window, window)).cwiseAbs().maxCoeff();
}

double overcompleteness_defect(int n, double radius, int radial_points, int angular_points,
                               int window) {
  require_n(n, "overcompleteness_defect");
  if (radial_points < 1 || angular_points < 1 || window < 1 || !(radius > 0.0)) {
    throw DomainError("overcompleteness_defect: invalid quadrature parameters");
  }
  const double dr = radius / radial_points;
  const double dtheta = 2.0 * pi / angular_points;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(window, window);
  Eigen::VectorXcd c(window);
  for (int i = 0; i < radial_points; ++i) {
    const double r = (i + 0.5) * dr;
    const double weight = r * dr * dtheta / pi;
    for (int j = 0; j < angular_points; ++j) {
      const Complex alpha = std::polar(r, (j + 0.5) * dtheta);
      for (int k = 0; k < window; ++k) c[k] = expansion_coefficient(n, alpha, k);
      acc.noalias() += weight * c * c.adjoint();
    }
  }
  return (acc - Eigen::MatrixXcd::Identity(window, window)).cwiseAbs().maxCoeff();
}

Complex expansion_coefficient(int n, Complex alpha, int k) {
  require_n(n, "expansion_coefficient");
  if (k < 0) throw DomainError("expansion_coefficient: negative k");
  if (alpha == Complex(0.0, 0.0)) return k == n ? 1.0 : 0.0;
  const auto lc = log_coefficient(n, alpha, k);
  if (std::isinf(lc.log_magnitude)) return 0.0;
  return std::exp(lc.log_magnitude) * lc.phase;
}

std::vector<Complex> number_expansion(int n, Complex alpha, int k_max) {
  require_n(n, "number_expansion");
  if (k_max < 0) throw DomainError("number_expansion: negative k_max");
  std::vector<Complex> out(k_max + 1);
  double mass = 0.0;
  for (int k = 0; k <= k_max; ++k) {
    out[k] = expansion_coefficient(n, alpha, k);
    mass += std::norm(out[k]);
  }
  if (mass < 1.0 - kExpansionMassTolerance) {
    std::ostringstream msg;
    msg << "number_expansion: k_max=" << k_max << " captures only " << mass
        << " of the probability for n=" << n << ", |alpha|=" << std::abs(alpha);
    throw TruncationError(msg.str(), 1.0 - mass);
  }
  return out;
}

double photon_probability(int n, Complex alpha, int k) {
  require_n(n, "photon_probability");
  if (k < 0) throw DomainError("photon_probability: negative k");
  if (alpha == Complex(0.0, 0.0)) return k == n ? 1.0 : 0.0;
  const auto lc = log_coefficient(n, alpha, k);
  if (std::isinf(lc.log_magnitude)) return 0.0;
  return std::exp(2.0 * lc.log_magnitude);
}

double PhotonDistribution::deficit() const {
  double sum = 0.0;
  for (double p : probs) sum += p;
  return 1.0 - sum;
}

PhotonDistribution photon_distribution(int n, Complex alpha, int k_max) {
  if (k_max < 0) throw DomainError("photon_distribution: negative k_max");
  PhotonDistribution dist;
  dist.n = n;
  dist.alpha = alpha;
  dist.probs.resize(k_max + 1);
  for (int k = 0; k <= k_max; ++k) dist.probs[k] = photon_probability(n, alpha, k);
  return dist;
}

double mean_photon(int n, Complex alpha) {
  require_n(n, "mean_photon");
  return n + std::norm(alpha);
}

double photon_variance(int n, Complex alpha) {
  require_n(n, "photon_variance");
  return std::norm(alpha);
}

double fractional_uncertainty(int n, Complex alpha) {
  require_n(n, "fractional_uncertainty");
  const double mean = n + std::norm(alpha);
  if (mean == 0.0) throw DomainError("fractional_uncertainty: undefined for the vacuum");
  return std::abs(alpha) / mean;
}

double g2(int n, Complex alpha) {
  require_n(n, "g2");
  const double mean = n + std::norm(alpha);
  if (mean == 0.0) throw DomainError("g2: undefined (0/0) for the vacuum");
  return 1.0 - n / (mean * mean);
}

int g2_argmin_over_n(Complex alpha, int n_max) {
  if (!(n_max > std::norm(alpha))) {
    throw DomainError("g2_argmin_over_n: n_max must exceed |alpha|^2");
  }
  int best = -1;
  double best_value = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= n_max; ++n) {
    if (n == 0 && alpha == Complex(0.0, 0.0)) continue;
    const double value = g2(n, alpha);
    if (value < best_value) {
      best_value = value;
      best = n;
    }
  }
  return best;
}

}  // namespace gcs
