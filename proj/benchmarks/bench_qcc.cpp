// Copyright 2026 The qcc Authors
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

#include "qcc/channel.hpp"
#include "qcc/conjugate.hpp"
#include "qcc/gl.hpp"
#include "qcc/pauli.hpp"
#include "qcc/purity.hpp"
#include "qcc/random.hpp"

namespace {

using namespace qcc;

KrausChannel bench_channel(int d, int n) {
  Rng rng(static_cast<std::uint64_t>(d * 100 + n));
  return random_channel(d, d, n, rng);
}

void BM_ConjugateKraus(benchmark::State& state) {
  const KrausChannel ch = bench_channel(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_kraus(ch));
}
BENCHMARK(BM_ConjugateKraus)->Arg(2)->Arg(4)->Arg(8);

void BM_ChoiToKraus(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const ChoiMatrix choi = kraus_to_choi(bench_channel(d, d));
  for (auto _ : state) benchmark::DoNotOptimize(choi_to_kraus(choi));
}
BENCHMARK(BM_ChoiToKraus)->Arg(2)->Arg(3)->Arg(4);

void BM_FindRelatingIsometry(benchmark::State& state) {
  const KrausChannel ch = bench_channel(static_cast<int>(state.range(0)), 3);
  const KrausChannel a = conjugate_kraus(ch);
  const KrausChannel b = choi_to_kraus(conjugate_choi(kraus_to_choi(ch)));
  for (auto _ : state) benchmark::DoNotOptimize(find_relating_isometry(a, b));
}
BENCHMARK(BM_FindRelatingIsometry)->Arg(2)->Arg(3);

void BM_NuP(benchmark::State& state) {
  const KrausChannel ch = bench_channel(static_cast<int>(state.range(0)), 3);
  PurityOptions opts;
  opts.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(nu_p(ch, 2.0, opts).value);
}
BENCHMARK(BM_NuP)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SMin(benchmark::State& state) {
  const KrausChannel ch = bench_channel(static_cast<int>(state.range(0)), 3);
  PurityOptions opts;
  opts.restarts = 8;
  for (auto _ : state) benchmark::DoNotOptimize(s_min(ch, opts).value);
}
BENCHMARK(BM_SMin)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_NoisyConjugateImage(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const PauliBasis basis = build_basis(d);
  Rng rng(5);
  const Matrix rho = projector(random_pure_state(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(noisy_conjugate_image(basis, rho));
}
BENCHMARK(BM_NoisyConjugateImage)->Arg(2)->Arg(3)->Arg(5);

void BM_Theta(benchmark::State& state) {
  const KrausChannel ch = bench_channel(2, 3);
  const int p = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta(ch, p));
}
BENCHMARK(BM_Theta)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
