// Copyright 2026 The latshot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "latshot/lattice.hpp"
#include "latshot/models.hpp"
#include "latshot/partition.hpp"
#include "latshot/perturbed.hpp"
#include "latshot/shot_sim.hpp"
#include "latshot/spectral.hpp"

namespace latshot {
namespace {

void BM_PauliMul(benchmark::State& state) {
  const auto a = PauliString::parse("XYZIXYZIXYZIXYZIXYZI");
  const auto b = PauliString::parse("ZZXXYYIIZZXXYYIIZZXX");
  for (auto _ : state) benchmark::DoNotOptimize(pauli_mul(a, b));
}
BENCHMARK(BM_PauliMul);

// Matrix-free H|psi> for the TFIM on nx x 4 sites.
void BM_ApplyTfim(benchmark::State& state) {
  const auto H = build_tfim(build_lattice(static_cast<int>(state.range(0)), 4), 1, 1);
  const CompiledOperator op(H.pauli());
  const auto psi = haar_sample(op.n_qubits(), 1);
  std::vector<cplx> out(psi.dim());
  for (auto _ : state) {
    op.apply(psi.amp.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.dim()));
}
BENCHMARK(BM_ApplyTfim)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_GroundStateLanczos(benchmark::State& state) {
  const auto H = build_tfim(build_lattice(static_cast<int>(state.range(0)), 3), 1, 1);
  SolverOptions o;
  o.force_lanczos = true;
  const auto pauli = H.pauli();
  for (auto _ : state) benchmark::DoNotOptimize(ground_state(pauli, 1, o));
}
BENCHMARK(BM_GroundStateLanczos)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SamplerGeo(benchmark::State& state) {
  const auto H = build_tfim(build_lattice(4, 3), 1, 1);
  const auto geo = geometric_partition(H, PartitionSpec::geo1d(2));
  const auto psi = haar_sample(H.n_qubits(), 2);
  for (auto _ : state) {
    const auto s = build_sampler(geo.parts[0]);
    benchmark::DoNotOptimize(outcome_distribution(s, psi));
  }
}
BENCHMARK(BM_SamplerGeo)->Unit(benchmark::kMillisecond);

void BM_SampleShots(benchmark::State& state) {
  const auto H = build_tfim(build_lattice(4, 3), 1, 1);
  const auto s = build_sampler(pauli_baseline(H).parts[1]);
  const auto d = outcome_distribution(s, haar_sample(H.n_qubits(), 3));
  std::mt19937_64 rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_outcome(d, rng));
}
BENCHMARK(BM_SampleShots);

}  // namespace
}  // namespace latshot

BENCHMARK_MAIN();
