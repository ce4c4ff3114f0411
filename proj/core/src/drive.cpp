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

#include "gcs/drive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "gcs/error.hpp"
#include "gcs/expm.hpp"

namespace gcs::drive {
namespace {

constexpr double kZetaTolerance = 1e-10;
constexpr double kOdeTolerance = 1e-13;
constexpr unsigned kMaxDepth = 20;  // 2^20 panels
constexpr std::size_t kMaxOdeSteps = std::size_t{1} << 20;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double evaluate(const Shape& shape, double t) {
  return std::visit(
      Overloaded{
          [t](const Gaussian& g) {
            const double u = (t - g.center) / g.width;
            return g.amplitude * std::exp(-0.5 * u * u);
          },
          [](const Rectangular& r) { return r.amplitude; },
          [t](const SinusoidalBurst& s) {
            return s.amplitude * std::sin(s.frequency * t + s.phase);
          },
          [t](const SampleTable& table) {
            const double u = (t - table.start) / table.spacing;
            const auto last = static_cast<double>(table.samples.size() - 1);
            if (u < 0.0 || u > last) return 0.0;
            const auto i = std::min(static_cast<std::size_t>(u), table.samples.size() - 2);
            const double frac = u - static_cast<double>(i);
            return (1.0 - frac) * table.samples[i] + frac * table.samples[i + 1];
          },
      },
      shape);
}

Shape scale_shape(Shape shape, double factor) {
  std::visit(Overloaded{
                 [factor](Gaussian& g) { g.amplitude *= factor; },
                 [factor](Rectangular& r) { r.amplitude *= factor; },
                 [factor](SinusoidalBurst& s) { s.amplitude *= factor; },
                 [factor](SampleTable& table) {
                   for (double& v : table.samples) v *= factor;
                 },
             },
             shape);
  return shape;
}

void validate_shape(const Shape& shape) {
  std::visit(Overloaded{
                 [](const Gaussian& g) {
                   if (!(g.width > 0.0)) throw DomainError("gaussian pulse: width must be positive");
                 },
                 [](const Rectangular&) {},
                 [](const SinusoidalBurst&) {},
                 [](const SampleTable& table) {
                   if (table.samples.size() < 2) {
                     throw DomainError("sample table pulse: need at least 2 samples");
                   }
                   if (!(table.spacing > 0.0)) {
                     throw DomainError("sample table pulse: spacing must be positive");
                   }
                 },
             },
             shape);
}

void require_time(const Pulse& pulse, double t, const char* what) {
  if (t < pulse.t0() || t > pulse.t1()) {
    std::ostringstream msg;
    msg << what << ": t=" << t << " outside pulse window [" << pulse.t0() << ", "
        << pulse.t1() << "]";
    throw DomainError(msg.str());
  }
}

void require_omega(double omega) {
  if (!(omega > 0.0)) throw DomainError("drive: omega must be positive");
}

// Breakpoints of the pulse clipped to [t0, t].
std::vector<double> segments(const Pulse& pulse, double t) {
  std::vector<double> pts;
  for (double b : pulse.breakpoints()) {
    if (b < t) pts.push_back(b);
  }
  pts.push_back(t);
  return pts;
}

}  // namespace

Pulse::Pulse(Shape shape, double t0, double t1)
    : Pulse(std::vector<Shape>{std::move(shape)}, t0, t1) {}

Pulse::Pulse(std::vector<Shape> components, double t0, double t1)
    : components_(std::move(components)), t0_(t0), t1_(t1) {
  if (!(t0 < t1)) throw DomainError("pulse: need t0 < t1");
  for (const auto& c : components_) validate_shape(c);
}

Pulse Pulse::zero(double t0, double t1) { return Pulse(Rectangular{0.0}, t0, t1); }

Pulse Pulse::from_table(SampleTable table) {
  const double t0 = table.start;
  const double t1 = table.start + table.spacing * static_cast<double>(table.samples.size() - 1);
  validate_shape(table);
  return Pulse(std::move(table), t0, t1);
}

double Pulse::operator()(double t) const {
  if (t < t0_ || t > t1_) return 0.0;
  double sum = 0.0;
  for (const auto& c : components_) sum += evaluate(c, t);
  return sum;
}

std::vector<double> Pulse::breakpoints() const {
  std::vector<double> pts{t0_, t1_};
  for (const auto& c : components_) {
    if (const auto* table = std::get_if<SampleTable>(&c)) {
      for (std::size_t i = 0; i < table->samples.size(); ++i) {
        const double node = table->start + table->spacing * static_cast<double>(i);
        if (node > t0_ && node < t1_) pts.push_back(node);
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Pulse Pulse::scaled(double factor) const {
  std::vector<Shape> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(scale_shape(c, factor));
  return Pulse(std::move(out), t0_, t1_);
}

Pulse operator+(const Pulse& lhs, const Pulse& rhs) {
  if (lhs.t0_ != rhs.t0_ || lhs.t1_ != rhs.t1_) {
    throw DomainError("pulse sum: windows differ");
  }
  std::vector<Shape> parts = lhs.components_;
  parts.insert(parts.end(), rhs.components_.begin(), rhs.components_.end());
  return Pulse(std::move(parts), lhs.t0_, lhs.t1_);
}

std::vector<std::string> pulse_names() {
  return {"zero", "gaussian", "rectangular", "sinusoidal"};
}

Pulse make_pulse(std::string_view name, const std::map<std::string, double>& params,
                 double t0, double t1) {
  auto take = [&params](std::initializer_list<std::pair<const char*, double*>> keys) {
    for (const auto& [key, value] : params) {
      bool known = false;
      for (const auto& [k, dst] : keys) {
        if (key == k) {
          *dst = value;
          known = true;
        }
      }
      if (!known) throw DomainError("pulse: unknown parameter '" + key + "'");
    }
  };
  if (name == "zero") {
    take({});
    return Pulse::zero(t0, t1);
  }
  if (name == "gaussian") {
    Gaussian g;
    g.center = 0.5 * (t0 + t1);
    g.width = (t1 - t0) / 10.0;
    take({{"amplitude", &g.amplitude}, {"center", &g.center}, {"width", &g.width}});
    return Pulse(g, t0, t1);
  }
  if (name == "rectangular") {
    Rectangular r;
    take({{"amplitude", &r.amplitude}});
    return Pulse(r, t0, t1);
  }
  if (name == "sinusoidal") {
    SinusoidalBurst s;
    take({{"amplitude", &s.amplitude}, {"frequency", &s.frequency}, {"phase", &s.phase}});
    return Pulse(s, t0, t1);
  }
  throw DomainError("unknown pulse '" + std::string(name) + "'");
}

Complex zeta(const Pulse& pulse, double omega, double t) {
  require_omega(omega);
  require_time(pulse, t, "zeta");
  using Quad = boost::math::quadrature::gauss_kronrod<double, 15>;
  double cos_part = 0.0;
  double sin_part = 0.0;
  double error = 0.0;
  const auto pts = segments(pulse, t);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double err_c = 0.0;
    double err_s = 0.0;
    cos_part += Quad::integrate(
        [&](double s) { return pulse(s) * std::cos(omega * s); }, pts[i], pts[i + 1],
        kMaxDepth, 1e-13, &err_c);
    sin_part += Quad::integrate(
        [&](double s) { return pulse(s) * std::sin(omega * s); }, pts[i], pts[i + 1],
        kMaxDepth, 1e-13, &err_s);
    error += err_c + err_s;
  }
  if (error > kZetaTolerance) {
    std::ostringstream msg;
    msg << "zeta: quadrature error estimate " << error << " exceeds " << kZetaTolerance;
    throw ConvergenceError(msg.str(), error);
  }
  // −i/√(2ω) · (C + iS)
  return Complex(sin_part, -cos_part) / std::sqrt(2.0 * omega);
}

SweepResult integrate_drive(const Pulse& pulse, double omega, double t) {
  require_omega(omega);
  require_time(pulse, t, "integrate_drive");
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 3>;

  // y = (Re G, Im G, β) with G(t) = ∫ f(s) e^{−iωs} ds.
  auto system = [&pulse, omega](const State& y, State& dy, double s) {
    const double f = pulse(s);
    const double c = std::cos(omega * s);
    const double sn = std::sin(omega * s);
    dy[0] = f * c;
    dy[1] = -f * sn;
    // Im(e^{iωs} G) = sin(ωs) Re G + cos(ωs) Im G
    dy[2] = f * (sn * y[0] + c * y[1]) / (2.0 * omega);
  };

  State y{0.0, 0.0, 0.0};
  std::size_t total_steps = 0;
  auto observer = [&total_steps](const State&, double) {
    if (++total_steps > kMaxOdeSteps) {
      throw ConvergenceError("integrate_drive: ODE step cap reached", kOdeTolerance);
    }
  };
  const auto pts = segments(pulse, t);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double span = pts[i + 1] - pts[i];
    if (span <= 0.0) continue;
    auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(kOdeTolerance,
                                                                             kOdeTolerance);
    odeint::integrate_adaptive(stepper, system, y, pts[i], pts[i + 1], span / 64.0, observer);
  }
  // ∫ f e^{iωs} = conj(G) for real f.
  const Complex g(y[0], y[1]);
  const Complex z = Complex(0.0, -1.0) * std::conj(g) / std::sqrt(2.0 * omega);
  return {z, y[2]};
}

double beta_phase(const Pulse& pulse, double omega, double t) {
  return integrate_drive(pulse, omega, t).beta;
}

fock::ModeOperator time_development(const Pulse& pulse, double omega, int dim) {
  const Complex z = zeta(pulse, omega, pulse.t1());
  const double beta = beta_phase(pulse, omega, pulse.t1());
  const double budget = std::norm(z) + 6.0 * std::abs(z) + 10.0;
  if (!(budget < dim)) {
    std::ostringstream msg;
    msg << "time_development: dimension " << dim << " too small for |zeta|=" << std::abs(z);
    throw TruncationError(msg.str(), std::exp(-std::norm(z)));
  }
  const auto ops = fock::ladder_matrices(dim);
  const Complex displaced = z * std::polar(1.0, -omega * pulse.t1());
  const Eigen::MatrixXcd generator = displaced * ops.creation.matrix() -
                                     std::conj(displaced) * ops.annihilation.matrix();
  Eigen::VectorXcd free(dim);
  const double duration = pulse.t1() - pulse.t0();
  for (int k = 0; k < dim; ++k) free[k] = std::polar(1.0, -(k + 0.5) * omega * duration);
  Eigen::MatrixXcd u = expm(generator) * free.asDiagonal();
  u *= std::polar(1.0, beta);
  return fock::ModeOperator(std::move(u));
}

DrivenState drive_number_state(int n, const Pulse& pulse, double omega, int dim) {
  if (n < 0) throw DomainError("drive_number_state: negative n");
  if (!(2 * n < dim)) throw TruncationError("drive_number_state: need n < D/2", 1.0);
  const auto u = time_development(pulse, omega, dim);
  const Complex z = zeta(pulse, omega, pulse.t1());
  const double beta = beta_phase(pulse, omega, pulse.t1());
  const Label predicted{n, z, omega};

  Eigen::VectorXcd expected(dim);
  for (int k = 0; k < dim; ++k) {
    expected[k] = expansion_coefficient(n, z, k) *
                  std::polar(1.0, -(k + 0.5) * omega * pulse.t1());
  }
  fock::FockVector state(u.matrix().col(n), omega);
  const double fidelity =
      std::abs(expected.dot(state.coeffs())) / (expected.norm() * state.norm());
  return {std::move(state), predicted, z, beta, fidelity};
}

fock::HamiltonianFn driven_hamiltonian(const Pulse& pulse, double omega, int dim) {
  require_omega(omega);
  Eigen::MatrixXcd h0 = fock::oscillator_hamiltonian(dim, omega).matrix();
  Eigen::MatrixXcd x = fock::position_operator(dim, omega).matrix();
  return [pulse, h0 = std::move(h0), x = std::move(x)](double t) -> Eigen::MatrixXcd {
    return h0 + pulse(t) * x;
  };
}

}  // namespace gcs::drive
