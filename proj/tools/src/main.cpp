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


#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "fmt/format.h"

#include "commands.hpp"
#include "gcs/error.hpp"
#include "gcs/version.hpp"

namespace {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kNumerical = 3 };

void print(const gcs::cli::Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  using namespace gcs::cli;

  CLI::App app{"Generalized coherent states of the harmonic oscillator: densities, photon "
               "statistics, beamsplitter and drive reports, verification suites."};
  app.set_version_flag("--version", std::string(gcs::kVersion));
  app.set_config("--config", "", "key=value file; keys: n, alpha, omega, grid, t, out, dim, tol");
  app.require_subcommand(1);
  app.fallthrough();

  CommonOptions opts;
  app.add_option("--n", opts.n, "Number-state index n >= 0");
  auto* alpha = app.add_option("--alpha", opts.alpha, "Complex amplitude as RE,IM");
  app.add_option("--alpha-mag", opts.alpha_mag, "|alpha|")->excludes(alpha);
  app.add_option("--alpha-phase", opts.alpha_phase, "arg(alpha) [rad]")->excludes(alpha);
  app.add_option("--omega", opts.omega, "Angular frequency (> 0)")->capture_default_str();
  app.add_option("--grid", opts.grid, "Spatial or field grid MIN:MAX:POINTS");
  app.add_option("--t", opts.t, "Time range MIN:MAX[:FRAMES]; for drive the pulse window");
  app.add_option("--out", opts.out, "Output directory (default $GCS_OUT_DIR/<command>)");
  app.add_option("--dim", opts.dim, "Fock truncation dimension");
  app.add_option("--tol", opts.tol, "Tail-mass tolerance");

  auto* density = app.add_subcommand("density", "|psi(x,t)|^2 over a grid and time frames");
  auto* wavefunction = app.add_subcommand("wavefunction", "Re and Im of psi(x,t)");

  auto* field = app.add_subcommand("field-density", "Electric-field distribution P(E; kx)");
  std::optional<std::string> phases;
  field->add_option("--phases", phases, "Phase grid kx MIN:MAX:POINTS (default 0:2pi:129)");

  auto* photon = app.add_subcommand("photon-dist", "Photon-number distribution P_k");
  int k_max = 220;
  photon->add_option("--k-max", k_max, "Largest photon number")->capture_default_str();

  auto* expect = app.add_subcommand("expect", "Moments from closed forms and the Fock oracle");

  auto* split = app.add_subcommand("beamsplit", "Beamsplitter output decomposition");
  BeamsplitArgs split_args;
  split->add_option("--R", split_args.reflection, "Reflection coefficient RE,IM");
  split->add_option("--T", split_args.transmission, "Transmission coefficient RE,IM");

  auto* drive = app.add_subcommand("drive", "Drive |n> with a classical force");
  DriveArgs drive_args;
  drive->add_option("--pulse", drive_args.pulse, "zero | gaussian | rectangular | sinusoidal")
      ->capture_default_str();
  drive->add_option("--pulse-param", drive_args.params, "Pulse parameter key=value");
  drive->add_option("--steps", drive_args.steps, "Steps for the numerical evolution")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  std::string suite = "all";
  verify->add_option("suite", suite, "specfun | fock | gcs | beamsplitter | drive | all")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (density->parsed()) print(cmd_density(opts));
    if (wavefunction->parsed()) print(cmd_wavefunction(opts));
    if (field->parsed()) print(cmd_field_density(opts, phases));
    if (photon->parsed()) print(cmd_photon_dist(opts, k_max));
    if (expect->parsed()) print(cmd_expect(opts));
    if (split->parsed()) print(cmd_beamsplit(opts, split_args));
    if (drive->parsed()) print(cmd_drive(opts, drive_args));
    if (verify->parsed()) {
      const auto outcome = cmd_verify(opts, suite);
      std::cout << outcome.table;
      return outcome.passed ? kOk : kVerifyFailed;
    }
  } catch (const UsageError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const gcs::TruncationError& e) {
    fmt::print(stderr, "error: {} (tail mass {:.3g})\n", e.what(), e.tail_mass());
    return kNumerical;
  } catch (const gcs::ConvergenceError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kNumerical;
  } catch (const gcs::DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  }
  return kOk;
}
