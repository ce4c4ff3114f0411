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


#include <complex>

#include "benchmark/benchmark.h"

#include "gcs/drive.hpp"
#include "gcs/expm.hpp"
#include "gcs/fock.hpp"
#include "gcs/specfun.hpp"
#include "gcs/states.hpp"

namespace {

using gcs::Complex;

void BM_DisplacementExpm(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::fock::displacement_matrix(Complex(2.0, 1.0), dim));
  }
}
BENCHMARK(BM_DisplacementExpm)->Arg(60)->Arg(120)->Arg(220)->Unit(benchmark::kMillisecond);

void BM_PhotonProbability(benchmark::State& state) {
  int k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::photon_probability(2, 10.0, k));
    k = (k + 1) % 220;
  }
}
BENCHMARK(BM_PhotonProbability);

void BM_PhotonDistribution(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gcs::photon_distribution(2, 10.0, 220));
}
BENCHMARK(BM_PhotonDistribution)->Unit(benchmark::kMicrosecond);

void BM_Eigenfunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  double x = -5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::specfun::eigenfunction(n, 1.0, x));
    x = x > 5.0 ? -5.0 : x + 0.01;
  }
}
BENCHMARK(BM_Eigenfunction)->Arg(2)->Arg(20)->Arg(200);

void BM_DensityGrid(benchmark::State& state) {
  const gcs::Label label{2, 3.0, 1.0};
  const auto grid = gcs::default_grid(label);
  for (auto _ : state) benchmark::DoNotOptimize(gcs::density_grid(label, grid, 0.7));
}
BENCHMARK(BM_DensityGrid)->Unit(benchmark::kMicrosecond);

void BM_EvolutionSteps(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const gcs::drive::Pulse pulse(gcs::drive::Gaussian{1.0, 5.0, 1.0}, 0.0, 10.0);
  const auto h = gcs::drive::driven_hamiltonian(pulse, 1.0, dim);
  const Eigen::MatrixXcd start = Eigen::MatrixXcd::Identity(dim, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::fock::schrodinger_evolve_block(h, start, 0.0, 10.0, 100));
  }
}
BENCHMARK(BM_EvolutionSteps)->Arg(60)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_ZetaAndBeta(benchmark::State& state) {
  const gcs::drive::Pulse pulse(gcs::drive::Gaussian{1.0, 5.0, 1.0}, 0.0, 10.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcs::drive::zeta(pulse, 1.0, 10.0));
    benchmark::DoNotOptimize(gcs::drive::beta_phase(pulse, 1.0, 10.0));
  }
}
BENCHMARK(BM_ZetaAndBeta)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
