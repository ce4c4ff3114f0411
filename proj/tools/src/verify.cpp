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


#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gcs/beamsplitter.hpp"
#include "gcs/drive.hpp"
#include "gcs/expm.hpp"
#include "gcs/fock.hpp"
#include "gcs/specfun.hpp"
#include "options.hpp"
#include "oracles.hpp"

namespace gcs::cli {
namespace {

using std::numbers::pi;
namespace oracle = gcs::testing;

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(std::string what, double residual, double tolerance) {
    results_.push_back({name_, std::move(what), residual, tolerance,
                        std::isfinite(residual) && residual <= tolerance});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string name_;
  std::vector<CheckResult> results_;
};

double relative(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

std::vector<CheckResult> specfun_suite() {
  Suite s("specfun");
  double h = 0.0;
  double l = 0.0;
  for (int n = 0; n <= 12; ++n) {
    for (int iz = -30; iz <= 30; ++iz) {
      const double z = iz / 10.0;
      h = std::max(h, relative(specfun::hermite(n, z), oracle::hermite_explicit(n, z)));
      for (int m = 0; m <= 6; ++m) {
        l = std::max(l, relative(specfun::laguerre_assoc(n, m, z),
                                 oracle::laguerre_explicit(n, m, z)));
      }
    }
  }
  s.check("hermite recurrence vs explicit sum (n<=12)", h, 1e-12);
  s.check("laguerre recurrence vs explicit sum (k<=12, m<=6)", l, 1e-12);

  double direct = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (double x : {-3.1, -0.4, 0.0, 0.7, 2.5}) {
      direct = std::max(direct, std::abs(specfun::eigenfunction(n, 1.3, x) -
                                         oracle::eigenfunction_direct(n, 1.3, x)));
    }
  }
  s.check("eigenfunction vs closed form (n<=20)", direct, 1e-12);

  double ortho = 0.0;
  for (int n = 0; n <= 10; ++n) {
    for (int m = n; m <= 10; ++m) {
      const double v = oracle::simpson_fn(
          [&](double x) {
            return specfun::eigenfunction(n, 1.0, x) * specfun::eigenfunction(m, 1.0, x);
          },
          -12.0, 12.0, 4096);
      ortho = std::max(ortho, std::abs(v - (n == m ? 1.0 : 0.0)));
    }
  }
  s.check("eigenfunction orthonormality (n,m<=10)", ortho, 1e-8);

  bool finite = true;
  for (double x : {0.0, 5.0, 20.0, 25.0}) finite &= std::isfinite(specfun::eigenfunction(200, 1.0, x));
  s.check("eigenfunction finite at n=200", finite ? 0.0 : 1.0, 0.0);

  double lf = 0.0;
  for (int n = 0; n <= 170; ++n) {
    lf = std::max(lf, relative(specfun::log_factorial(n), oracle::log_factorial_sum(n)));
  }
  s.check("log_factorial vs log sum (n<=170)", lf, 1e-12);
  return s.take();
}

std::vector<CheckResult> fock_suite() {
  Suite s("fock");
  const int dim = 40;
  const auto ops = fock::ladder_matrices(dim);
  const Eigen::MatrixXcd comm = ops.annihilation.matrix() * ops.creation.matrix() -
                                ops.creation.matrix() * ops.annihilation.matrix();
  s.check("[a, a+] = 1 away from the cutoff",
          (comm.topLeftCorner(dim - 1, dim - 1) - Eigen::MatrixXcd::Identity(dim - 1, dim - 1))
              .cwiseAbs()
              .maxCoeff(),
          1e-12);

  const auto d = fock::displacement_matrix(Complex(2.0, 1.0), 60).matrix();
  const Eigen::MatrixXcd gram = d.leftCols(30).adjoint() * d.leftCols(30);
  s.check("displacement unitarity on the safe block",
          (gram - Eigen::MatrixXcd::Identity(30, 30)).cwiseAbs().maxCoeff(), 1e-10);

  const auto d1 = fock::displacement_matrix(Complex(0.7, -0.2), 60).matrix();
  const auto d2 = fock::displacement_matrix(Complex(-0.3, 0.5), 60).matrix();
  const auto d12 = fock::displacement_matrix(Complex(0.4, 0.3), 60).matrix();
  // D(a)D(b) = e^{(ab* − a*b)/2} D(a+b).
  const Complex a(0.7, -0.2);
  const Complex b(-0.3, 0.5);
  const Complex phase = std::exp(0.5 * (a * std::conj(b) - std::conj(a) * b));
  s.check("displacement composition law",
          (d1 * d2 - phase * d12).topLeftCorner(30, 30).cwiseAbs().maxCoeff(), 1e-10);

  const Eigen::MatrixXcd h = fock::oscillator_hamiltonian(20, 1.0).matrix();
  double ev = 0.0;
  const Eigen::MatrixXcd u = gcs::expm(Complex(0.0, -1.3) * h);
  for (int k = 0; k < 20; ++k) ev = std::max(ev, std::abs(u(k, k) - std::polar(1.0, -1.3 * (k + 0.5))));
  s.check("expm of diagonal generator", ev, 1e-12);

  double mean = 0.0;
  const auto ops100 = fock::ladder_matrices(100);
  for (int n = 0; n <= 5; ++n) {
    for (Complex alpha : {Complex(0.5, 0.0), Complex(1.5, -1.0), Complex(0.0, 3.0)}) {
      const auto v = fock::gcs_vector(n, alpha, 100);
      mean = std::max(mean, std::abs(fock::expectation(ops100.number, v).real() - n -
                                     std::norm(alpha)));
    }
  }
  s.check("<N> on gcs_vector = n + |alpha|^2", mean, 1e-8);
  return s.take();
}

std::vector<CheckResult> gcs_suite(const VerifyHooks& hooks) {
  Suite s("gcs");
  {
    std::vector<double> xs;
    for (double x = -9.0; x <= 9.0; x += 0.5) xs.push_back(x);
    const std::vector<double> ts{0.0, 0.7, 1.9, 3.3};
    double worst = 0.0;
    for (int n : {0, 1, 2}) {
      for (double a : {0.0, 3.0}) {
        const Label label{n, a, 1.0};
        worst = std::max(worst, oracle::schrodinger_residual(
                                    [&](double x, double t) { return wavefunction(label, x, t); },
                                    1.0, xs, ts, 1e-3));
      }
    }
    s.check("Schrodinger residual, (n,alpha) in {0,1,2}x{0,3}", worst, 1e-4);
  }
  {
    double norm = 0.0;
    double shape = 0.0;
    for (int n : {0, 1, 2, 5}) {
      const Label label{n, Complex(3.0, -1.0), 1.0};
      const auto grid = default_grid(label);
      const auto dens = density_grid(label, grid, 1.3);
      norm = std::max(norm, std::abs(simpson(dens, grid.spacing()) - 1.0));
      const double shift = position_expectation(label, 1.3);
      for (int i = 0; i < grid.points(); i += 7) {
        shape = std::max(shape, std::abs(dens[i] - std::norm(wavefunction({n, 0.0, 1.0},
                                                                          grid[i] - shift, 1.3))));
      }
    }
    s.check("density normalization (Simpson)", norm, 1e-8);
    s.check("density shape preserved along trajectory", shape, 1e-12);
  }
  {
    double consistency = 0.0;
    double fock_oracle = 0.0;
    for (double a : {0.4, 1.3, 3.0}) {
      for (double theta : {0.0, 1.0, -2.2}) {
        const Complex alpha = std::polar(a, theta);
        const auto d = fock::displacement_matrix(alpha, 80).matrix();
        for (int n = 0; n <= 5; ++n) {
          for (int k = 0; k < 50; ++k) {
            const double p = photon_probability(n, alpha, k);
            consistency = std::max(consistency,
                                   std::abs(std::norm(expansion_coefficient(n, alpha, k)) - p));
            fock_oracle = std::max(fock_oracle, std::abs(p - std::norm(d(k, n))));
          }
        }
      }
    }
    s.check("|c_k|^2 = P_k", consistency, 1e-12);
    s.check("P_k vs |<k|D(alpha)|n>|^2 (n<=5, |alpha|<=3)", fock_oracle, 1e-10);
  }
  {
    double sub = 0.0;
    for (int n = 1; n <= 6; ++n)
      for (double a : {0.3, 1.0, 4.0})
        sub = std::max(sub, std::abs(photon_variance(n, a) - mean_photon(n, a) + n));
    s.check("variance - mean = -n (n>0)", sub, 1e-12);
  }
  {
    const int dim = 80;
    const auto [xq, yq] = fock::quadrature_operators(dim);
    double field = 0.0;
    double quad = 0.0;
    for (int n = 0; n <= 3; ++n) {
      for (Complex alpha : {Complex(0.0, 0.0), Complex(1.2, -0.7), Complex(2.7, 0.0)}) {
        const auto v = fock::gcs_vector(n, alpha, dim, {}, 2.0);
        const auto e = fock::field_operator(dim, 2.0, 0.6);
        const double m = fock::expectation(e, v).real();
        field = std::max(field, std::abs(fock::expectation(e * e, v).real() - m * m -
                                         field_variance(n, 2.0)));
        const double mx = fock::expectation(xq, v).real();
        const double my = fock::expectation(yq, v).real();
        const auto [vx, vy] = quadrature_variances(n);
        quad = std::max({quad, std::abs(fock::expectation(xq * xq, v).real() - mx * mx - vx),
                         std::abs(fock::expectation(yq * yq, v).real() - my * my - vy)});
      }
    }
    s.check("field variance vs Fock oracle", field, 1e-8);
    s.check("quadrature variances vs Fock oracle", quad, 1e-9);
  }
  {
    double ov = 0.0;
    for (int n = 0; n <= 4; ++n) {
      for (Complex alpha : {Complex(0.5, 0.5), Complex(-1.0, 0.2)}) {
        for (Complex beta : {Complex(0.0, 0.0), Complex(1.0, -0.5)}) {
          const auto u = fock::gcs_vector(n, beta, 60);
          const auto v = fock::gcs_vector(n, alpha, 60);
          ov = std::max(ov, std::abs(fock::inner(u, v) - overlap(n, beta, alpha)));
        }
      }
    }
    s.check("overlap vs Fock inner product", ov, 1e-9);
  }
  {
    // Coherent states are second-order coherent, n > 0 gives g2 < 1,
    // and for integer |alpha|^2 the minimum over n is 1 - 1/(4|alpha|^2) at n = |alpha|^2.
    double coherent = 0.0;
    double below_one = 0.0;
    double minimum = 0.0;
    double argmin = 0.0;
    for (double a : {0.5, 1.0, 3.0}) coherent = std::max(coherent, std::abs(hooks.g2(0, a) - 1.0));
    for (int n = 1; n <= 10; ++n) {
      for (double a : {0.0, 0.5, 2.0}) {
        if (!(hooks.g2(n, a) < 1.0)) below_one += 1.0;
      }
    }
    for (int a2 : {1, 4, 9}) {
      const Complex alpha = std::sqrt(static_cast<double>(a2));
      int best = 0;
      double best_value = hooks.g2(0, alpha);
      for (int n = 1; n <= 4 * a2 + 10; ++n) {
        const double v = hooks.g2(n, alpha);
        if (v < best_value) {
          best_value = v;
          best = n;
        }
      }
      minimum = std::max(minimum, std::abs(best_value - (1.0 - 1.0 / (4.0 * a2))));
      argmin = std::max(argmin, std::abs(static_cast<double>(best - a2)));
    }
    s.check("g2 = 1 for coherent states", coherent, 1e-15);
    s.check("g2 < 1 for n > 0 (violations)", below_one, 0.0);
    s.check("min over n of g2 = 1 - 1/(4|alpha|^2)", minimum, 1e-12);
    s.check("argmin over n of g2 = |alpha|^2", argmin, 0.0);

    double limit = 0.0;
    for (int n : {1, 3, 10}) {
      double prev = 0.0;
      for (double a : {5.0, 10.0, 20.0, 40.0}) {
        const double gap = std::abs(1.0 - hooks.g2(n, a));
        if (a > 5.0) limit = std::max(limit, gap - prev);
        prev = gap;
      }
    }
    s.check("g2 -> 1 monotonically as |alpha| grows", std::max(0.0, limit), 1e-12);
  }
  {
    double frac = 0.0;
    for (int n : {0, 1, 5}) {
      double prev = 1e300;
      for (double a : {5.0, 10.0, 20.0, 40.0}) {
        const double f = fractional_uncertainty(n, a);
        frac = std::max(frac, f - prev);
        prev = f;
      }
    }
    s.check("fractional uncertainty decreases along |alpha|", std::max(0.0, frac), 0.0);
  }
  s.check("completeness defect (alpha=1, N=60, d=10)", completeness_defect(1.0, 60, 10), 1e-6);
  return s.take();
}

std::vector<CheckResult> beamsplitter_suite() {
  Suite s("beamsplitter");
  const auto sym = beamsplitter::Spec::symmetric();
  double weight = 0.0;
  for (int n = 0; n <= 10; ++n) {
    double total = 0.0;
    for (const auto& t : beamsplitter::split_gcs(n, Complex(0.3, 0.2), sym)) {
      total += std::norm(t.amplitude);
    }
    weight = std::max(weight, std::abs(total - 1.0));
  }
  s.check("sum of |amplitude|^2 = 1 (n<=10)", weight, 1e-12);

  double factor = 0.0;
  for (int n = 0; n <= 3; ++n) {
    for (Complex alpha : {Complex(0.0, 0.0), Complex(1.0, 1.0), Complex(-2.0, 0.0)}) {
      const auto joint = beamsplitter::two_mode_oracle(n, alpha, sym, 40);
      const auto direct = beamsplitter::displaced_number_split(n, alpha, sym, 40);
      factor = std::max(factor, (joint - direct).topLeftCorner(25, 25).cwiseAbs().maxCoeff());
    }
  }
  s.check("two-mode oracle vs D3(R alpha) D4(T alpha) split", factor, 1e-9);

  double rank_gap = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const auto c = beamsplitter::gcs_basis_amplitudes(
        beamsplitter::split_gcs(n, Complex(1.5, -0.5), sym));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(c);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()[i] > 1e-12) ++rank;
    }
    rank_gap = std::max(rank_gap, std::abs(static_cast<double>(rank - (n + 1))));
  }
  s.check("Schmidt rank n+1 over the GCS basis", rank_gap, 0.0);
  return s.take();
}

std::vector<CheckResult> drive_suite() {
  Suite s("drive");
  const drive::Pulse g(drive::Gaussian{1.0, 5.0, 1.0}, 0.0, 10.0);
  auto f = [&](double t) { return g(t); };
  const Complex z = drive::zeta(g, 1.0, 10.0);
  const Complex expected =
      Complex(0.0, -1.0 / std::sqrt(2.0)) * oracle::fourier_richardson(f, 1.0, 0.0, 10.0, 20000);
  s.check("zeta vs Richardson trapezoid", std::abs(z - expected), 1e-10);
  s.check("beta vs nested Simpson",
          std::abs(drive::beta_phase(g, 1.0, 10.0) - oracle::beta_nested(f, 1.0, 0.0, 10.0, 800)),
          1e-9);
  s.check("zeta from ODE sweep vs quadrature",
          std::abs(drive::integrate_drive(g, 1.0, 10.0).zeta - z), 1e-10);

  const drive::Pulse b(drive::SinusoidalBurst{1.1, 0.8, 0.2}, 0.0, 10.0);
  s.check("zeta linearity",
          std::abs(drive::zeta(g + b, 1.0, 10.0) - z - drive::zeta(b, 1.0, 10.0)), 1e-10);

  const int dim = 60;
  const auto u = drive::time_development(g, 1.0, dim).matrix();
  s.check("time development unitarity",
          (u.leftCols(30).adjoint() * u.leftCols(30) - Eigen::MatrixXcd::Identity(30, 30))
              .cwiseAbs()
              .maxCoeff(),
          1e-10);

  const auto numeric = fock::schrodinger_evolve_block(
      drive::driven_hamiltonian(g, 1.0, dim), Eigen::MatrixXcd::Identity(dim, 3), 0.0, 10.0,
      4000);
  double infidelity = 0.0;
  double label = 0.0;
  for (int n = 0; n < 3; ++n) {
    infidelity = std::max(infidelity, 1.0 - std::abs(u.col(n).dot(numeric.col(n))));
    label = std::max(label, 1.0 - drive::drive_number_state(n, g, 1.0, dim).fidelity);
  }
  s.check("analytic vs numeric evolution, 1 - fidelity", infidelity, 1e-6);
  s.check("driven |n> vs label (n, zeta), 1 - fidelity", label, 1e-8);
  return s.take();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"specfun", "fock", "gcs", "beamsplitter", "drive", "all"};
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyHooks& hooks) {
  if (name == "specfun") return specfun_suite();
  if (name == "fock") return fock_suite();
  if (name == "gcs") return gcs_suite(hooks);
  if (name == "beamsplitter") return beamsplitter_suite();
  if (name == "drive") return drive_suite();
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const auto& suite : suite_names()) {
      if (suite == "all") continue;
      auto part = run_suite(suite, hooks);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw UsageError("unknown verify suite '" + name + "'");
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace gcs::cli
