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


#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "fmt/format.h"

#include "gcs/beamsplitter.hpp"
#include "gcs/drive.hpp"
#include "gcs/error.hpp"
#include "gcs/fock.hpp"

namespace gcs::cli {
namespace {

using std::numbers::pi;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json label_json(const Label& label) {
  return Json{{"n", label.n}, {"alpha", complex_json(label.alpha)}, {"omega", label.omega}};
}

double tolerance(const CommonOptions& opts) { return opts.tol.value_or(kDefaultTailTolerance); }

SpatialGrid spatial_grid(const CommonOptions& opts, const Label& label) {
  return opts.grid ? parse_grid(*opts.grid) : default_grid(label);
}

TimeRange one_period(const CommonOptions& opts, const Label& label, int frames) {
  if (opts.t) return parse_time_range(*opts.t, frames);
  return TimeRange{0.0, 2.0 * pi / label.omega, frames};
}

Json grid_json(const SpatialGrid& g) {
  return Json{{"min", g.min()}, {"max", g.max()}, {"points", g.points()}};
}

Json time_json(const TimeRange& t) {
  return Json{{"min", t.min}, {"max", t.max}, {"frames", t.frames}};
}

/// Truncation dimension for Fock-side oracles: the tail-safe minimum plus
/// a margin, unless the user fixed --dim.
int oracle_dim(const CommonOptions& opts, double abs_alpha, int n) {
  if (opts.dim) return *opts.dim;
  return std::max(fock::safe_dimension(abs_alpha, n) + 20 + n, 2 * n + 2);
}

Json finish(const std::filesystem::path& dir, const Manifest& manifest, Json summary) {
  manifest.write(dir);
  summary["out_dir"] = dir.string();
  summary["files"] = manifest.files;
  return summary;
}

}  // namespace

Json cmd_density(const CommonOptions& opts) {
  const Label label = opts.label(0, 3.0);
  const SpatialGrid grid = spatial_grid(opts, label);
  const TimeRange times = one_period(opts, label, 33);
  const auto dir = resolve_output_dir(opts.out, "density");

  double norm_min = 1e300;
  double norm_max = 0.0;
  double frame_change = 0.0;
  std::vector<double> previous;
  {
    CsvWriter csv(dir / "density.csv", {"t[time]", "x[length]", "density[1/length]"});
    for (int f = 0; f < times.frames; ++f) {
      const double t = times.at(f);
      const auto dens = density_grid(label, grid, t);
      for (int i = 0; i < grid.points(); ++i) csv.row({t, grid[i], dens[i]});
      const double norm = simpson(dens, grid.spacing());
      norm_min = std::min(norm_min, norm);
      norm_max = std::max(norm_max, norm);
      for (std::size_t i = 0; i < previous.size(); ++i) {
        frame_change = std::max(frame_change, std::abs(dens[i] - previous[i]));
      }
      previous = dens;
    }
  }
  Manifest m;
  m.command = "density";
  m.parameters = {{"label", label_json(label)}, {"grid", grid_json(grid)}, {"t", time_json(times)}};
  m.files = {"density.csv"};
  return finish(dir, m,
                {{"command", "density"},
                 {"norm_min", norm_min},
                 {"norm_max", norm_max},
                 {"max_frame_change", frame_change}});
}

Json cmd_wavefunction(const CommonOptions& opts) {
  const Label label = opts.label(0, 3.0);
  const SpatialGrid grid = spatial_grid(opts, label);
  const TimeRange times = one_period(opts, label, 33);
  const auto dir = resolve_output_dir(opts.out, "wavefunction");
  {
    CsvWriter csv(dir / "wavefunction.csv",
                  {"t[time]", "x[length]", "re_psi[1/sqrt(length)]", "im_psi[1/sqrt(length)]"});
    for (int f = 0; f < times.frames; ++f) {
      const double t = times.at(f);
      for (int i = 0; i < grid.points(); ++i) {
        const Complex psi = wavefunction(label, grid[i], t);
        csv.row({t, grid[i], psi.real(), psi.imag()});
      }
    }
  }
  Manifest m;
  m.command = "wavefunction";
  m.parameters = {{"label", label_json(label)}, {"grid", grid_json(grid)}, {"t", time_json(times)}};
  m.files = {"wavefunction.csv"};
  return finish(dir, m, {{"command", "wavefunction"}});
}

Json cmd_field_density(const CommonOptions& opts, const std::optional<std::string>& phases) {
  const Label label = opts.label(0, 3.0);
  const SpatialGrid field = spatial_grid(opts, label);
  const SpatialGrid phase = phases ? parse_grid(*phases) : SpatialGrid(0.0, 2.0 * pi, 129);
  const double t = opts.t ? parse_time_range(*opts.t, 1).min : 0.0;
  const auto dir = resolve_output_dir(opts.out, "field-density");
  const auto fd = field_density_grid(label, phase, field, t);
  {
    CsvWriter csv(dir / "field_density.csv",
                  {"kx[rad]", "E[field]", "density[1/field]"});
    for (std::size_t i = 0; i < fd.phases.size(); ++i) {
      for (std::size_t j = 0; j < fd.fields.size(); ++j) {
        csv.row({fd.phases[i], fd.fields[j], fd.at(i, j)});
      }
    }
  }
  Manifest m;
  m.command = "field-density";
  m.parameters = {{"label", label_json(label)},
                  {"phase_grid", grid_json(phase)},
                  {"field_grid", grid_json(field)},
                  {"t", t}};
  m.files = {"field_density.csv"};
  return finish(dir, m, {{"command", "field-density"}, {"field_variance", field_variance(label.n, label.omega)}});
}

Json cmd_photon_dist(const CommonOptions& opts, int k_max) {
  const Label label = opts.label(0, 10.0);
  if (k_max < 0) throw UsageError("--k-max must be non-negative");
  const auto dist = photon_distribution(label.n, label.alpha, k_max);
  const double deficit = dist.deficit();
  if (deficit > tolerance(opts)) {
    throw TruncationError(fmt::format("photon-dist: k_max={} leaves probability {:.3g} "
                                      "beyond the cutoff (tolerance {:.3g})",
                                      k_max, deficit, tolerance(opts)),
                          deficit);
  }
  const auto dir = resolve_output_dir(opts.out, "photon-dist");
  {
    CsvWriter csv(dir / "photon_dist.csv", {"k[photons]", "probability[1]"});
    for (int k = 0; k <= k_max; ++k) csv.row({static_cast<double>(k), dist.probs[k]});
  }
  Json minima = Json::array();
  for (int k = 1; k < k_max; ++k) {
    if (dist.probs[k] < dist.probs[k - 1] && dist.probs[k] <= dist.probs[k + 1]) {
      minima.push_back(Json{{"k", k}, {"probability", dist.probs[k]}});
    }
  }
  Manifest m;
  m.command = "photon-dist";
  m.parameters = {{"label", label_json(label)}, {"k_max", k_max}};
  m.tail_mass = std::max(0.0, deficit);
  m.tolerances = {{"tail_mass", tolerance(opts)}};
  m.files = {"photon_dist.csv"};
  return finish(dir, m,
                {{"command", "photon-dist"}, {"deficit", deficit}, {"local_minima", minima}});
}

Json cmd_expect(const CommonOptions& opts) {
  const Label label = opts.label(0, 3.0);
  const int dim = oracle_dim(opts, std::abs(label.alpha), label.n);
  const fock::TruncationPolicy policy{true, opts.tol.value_or(1e-12)};
  const auto v = fock::gcs_vector(label.n, label.alpha, dim, policy, label.omega);
  const auto ops = fock::ladder_matrices(dim);
  const double mean = fock::expectation(ops.number, v, policy).real();
  const double second = fock::expectation(ops.number * ops.number, v, policy).real();
  const auto e = fock::field_operator(dim, label.omega, 0.0);
  const double e1 = fock::expectation(e, v, policy).real();
  const double e2 = fock::expectation(e * e, v, policy).real();
  const auto [xq, yq] = fock::quadrature_operators(dim);
  const double x1 = fock::expectation(xq, v, policy).real();
  const double y1 = fock::expectation(yq, v, policy).real();
  const double vx = fock::expectation(xq * xq, v, policy).real() - x1 * x1;
  const double vy = fock::expectation(yq * yq, v, policy).real() - y1 * y1;

  const bool vacuum = label.n == 0 && label.alpha == Complex(0.0, 0.0);
  const auto [qx, qy] = quadrature_variances(label.n);
  Json formula{{"mean_photon", mean_photon(label.n, label.alpha)},
               {"photon_variance", photon_variance(label.n, label.alpha)},
               {"field_variance", field_variance(label.n, label.omega)},
               {"g2", vacuum ? Json(nullptr) : Json(g2(label.n, label.alpha))},
               {"fractional_uncertainty",
                vacuum ? Json(nullptr) : Json(fractional_uncertainty(label.n, label.alpha))},
               {"quadrature_variances", Json::array({qx, qy})}};
  Json oracle{{"mean_photon", mean},
              {"photon_variance", second - mean * mean},
              {"field_variance", e2 - e1 * e1},
              {"g2", vacuum ? Json(nullptr) : Json((second - mean) / (mean * mean))},
              {"fractional_uncertainty",
               vacuum ? Json(nullptr) : Json(std::sqrt(std::max(0.0, second - mean * mean)) / mean)},
              {"quadrature_variances", Json::array({vx, vy})}};

  const auto dir = resolve_output_dir(opts.out, "expect");
  Json report{{"command", "expect"},
              {"label", label_json(label)},
              {"dim", dim},
              {"formula", formula},
              {"oracle", oracle}};
  write_json(dir / "expect.json", report);
  Manifest m;
  m.command = "expect";
  m.parameters = {{"label", label_json(label)}};
  m.dim = dim;
  m.tail_mass = v.tail_mass();
  m.tolerances = {{"tail_mass", policy.tail_tolerance}};
  m.files = {"expect.json"};
  return finish(dir, m, report);
}

Json cmd_beamsplit(const CommonOptions& opts, const BeamsplitArgs& args) {
  const Label label = opts.label(1, 3.0);
  if (args.reflection.has_value() != args.transmission.has_value()) {
    throw UsageError("--R and --T must be given together");
  }
  beamsplitter::Spec spec = beamsplitter::Spec::symmetric();
  if (args.reflection) spec.reflection = parse_complex(*args.reflection);
  if (args.transmission) spec.transmission = parse_complex(*args.transmission);
  const auto terms = beamsplitter::split_gcs(label.n, label.alpha, spec, label.omega);

  Json term_list = Json::array();
  double weight = 0.0;
  for (const auto& t : terms) {
    weight += std::norm(t.amplitude);
    term_list.push_back(Json{{"m", t.m},
                             {"amplitude", complex_json(t.amplitude)},
                             {"arm3", label_json(t.arm3)},
                             {"arm4", label_json(t.arm4)}});
  }
  const int dim = oracle_dim(opts, std::abs(label.alpha), label.n);
  const auto joint = beamsplitter::two_mode_oracle(label.n, label.alpha, spec, dim);
  const auto [mean3, mean4] = beamsplitter::arm_mean_photons(joint);
  const double r2 = std::norm(spec.reflection);
  const double t2 = std::norm(spec.transmission);
  const double a2 = std::norm(label.alpha);
  double tail = 0.0;
  for (int k = 0; k < dim; ++k) tail += std::norm(joint(dim - 1, k)) + std::norm(joint(k, dim - 1));

  const auto dir = resolve_output_dir(opts.out, "beamsplit");
  Json report{{"command", "beamsplit"},
              {"label", label_json(label)},
              {"R", complex_json(spec.reflection)},
              {"T", complex_json(spec.transmission)},
              {"terms", term_list},
              {"total_weight", weight},
              {"arm3_mean_photon", {{"formula", r2 * (a2 + label.n)}, {"oracle", mean3}}},
              {"arm4_mean_photon", {{"formula", t2 * (a2 + label.n)}, {"oracle", mean4}}},
              {"dim", dim}};
  write_json(dir / "beamsplit.json", report);
  Manifest m;
  m.command = "beamsplit";
  m.parameters = {{"label", label_json(label)},
                  {"R", complex_json(spec.reflection)},
                  {"T", complex_json(spec.transmission)}};
  m.dim = dim;
  m.tail_mass = tail;
  m.tolerances = {{"constraints", 1e-12}, {"joint_norm", 1e-10}};
  m.files = {"beamsplit.json"};
  return finish(dir, m, report);
}

Json cmd_drive(const CommonOptions& opts, const DriveArgs& args) {
  const Label label = opts.label(0, 0.0);
  if (label.alpha != Complex(0.0, 0.0)) {
    throw UsageError("drive starts from a number state; --alpha is not accepted");
  }
  if (args.steps < 1) throw UsageError("--steps must be positive");
  std::map<std::string, double> params;
  for (const auto& kv : args.params) params.insert(parse_key_value(kv));
  const TimeRange window = opts.t ? parse_time_range(*opts.t, 2) : TimeRange{0.0, 10.0, 2};
  if (!(window.min < window.max)) throw UsageError("drive window needs MIN < MAX");
  drive::Pulse pulse = [&] {
    try {
      return drive::make_pulse(args.pulse, params, window.min, window.max);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }();

  const Complex z = drive::zeta(pulse, label.omega, pulse.t1());
  const int dim = opts.dim.value_or(std::max(120, fock::safe_dimension(std::abs(z), label.n) + 1));
  const auto driven = drive::drive_number_state(label.n, pulse, label.omega, dim);
  const auto u = drive::time_development(pulse, label.omega, dim);
  Eigen::MatrixXcd start = Eigen::MatrixXcd::Zero(dim, 1);
  start(label.n, 0) = 1.0;
  const auto numeric = fock::schrodinger_evolve_block(
      drive::driven_hamiltonian(pulse, label.omega, dim), start, pulse.t0(), pulse.t1(),
      args.steps);
  const double fidelity_numeric = std::abs(u.matrix().col(label.n).dot(numeric.col(0)));

  const auto dir = resolve_output_dir(opts.out, "drive");
  Json report{{"command", "drive"},
              {"n", label.n},
              {"omega", label.omega},
              {"pulse", args.pulse},
              {"pulse_params", params},
              {"window", Json::array({pulse.t0(), pulse.t1()})},
              {"zeta", complex_json(driven.zeta)},
              {"beta", driven.beta},
              {"alpha_pred", complex_json(driven.predicted.alpha)},
              {"fidelity_label", driven.fidelity},
              {"fidelity_numeric", fidelity_numeric},
              {"steps", args.steps},
              {"dim", dim}};
  write_json(dir / "drive.json", report);
  Manifest m;
  m.command = "drive";
  m.parameters = {{"n", label.n},
                  {"omega", label.omega},
                  {"pulse", args.pulse},
                  {"pulse_params", params},
                  {"window", Json::array({pulse.t0(), pulse.t1()})},
                  {"steps", args.steps}};
  m.dim = dim;
  m.tail_mass = driven.state.tail_mass();
  m.tolerances = {{"zeta_quadrature", 1e-10}, {"hermiticity", 1e-10}};
  m.files = {"drive.json"};
  return finish(dir, m, report);
}

VerifyOutcome cmd_verify(const CommonOptions& opts, const std::string& suite,
                         const VerifyHooks& hooks) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run_suite(suite, hooks);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  VerifyOutcome out;
  out.passed = all_passed(results);
  std::size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.name.size());
  out.table += fmt::format("{:<13}{:<{}}  {:>12}  {:>10}  {}\n", "suite", "check", width,
                           "residual", "tolerance", "status");
  Json rows = Json::array();
  for (const auto& r : results) {
    out.table += fmt::format("{:<13}{:<{}}  {:>12.3e}  {:>10.1e}  {}\n", r.suite, r.name, width,
                             r.residual, r.tolerance, r.passed ? "PASS" : "FAIL");
    rows.push_back(Json{{"suite", r.suite},
                        {"check", r.name},
                        {"residual", r.residual},
                        {"tolerance", r.tolerance},
                        {"passed", r.passed}});
  }
  out.table += fmt::format("{} checks, {} failed, {:.1f} s\n", results.size(),
                           std::count_if(results.begin(), results.end(),
                                         [](const CheckResult& r) { return !r.passed; }),
                           seconds);

  const auto dir = resolve_output_dir(opts.out, "verify");
  // Runtime is left out so that repeated runs write identical files.
  out.report = Json{{"command", "verify"}, {"suite", suite}, {"passed", out.passed}, {"checks", rows}};
  write_json(dir / "verify.json", out.report);
  Manifest m;
  m.command = "verify";
  m.parameters = {{"suite", suite}};
  m.files = {"verify.json"};
  m.write(dir);
  return out;
}

}  // namespace gcs::cli
