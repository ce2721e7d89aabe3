/* Copyright 2026 The mzbell Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "mzbell/optics.hpp"

namespace {

using mzbell::DisplacementMethod;

void BM_Displacement(benchmark::State& state, DisplacementMethod method) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const double r = static_cast<double>(state.range(1)) / 10.0;
  const mzbell::TruncatedFockSpace space(dim);
  for (auto _ : state) benchmark::DoNotOptimize(mzbell::displacement_matrix(std::polar(r, 0.4), space, method));
  state.SetComplexityN(state.range(0));
}

void Args(benchmark::internal::Benchmark* b) {
  for (int dim : {32, 64, 128, 256}) b->Args({dim, 10})->Args({dim, 38});
  b->Unit(benchmark::kMillisecond);
}

BENCHMARK_CAPTURE(BM_Displacement, direct, DisplacementMethod::direct)->Apply(Args);
BENCHMARK_CAPTURE(BM_Displacement, factorized, DisplacementMethod::factorized)->Apply(Args);
BENCHMARK_CAPTURE(BM_Displacement, laguerre, DisplacementMethod::laguerre)->Apply(Args);

void BM_DisplacementCoefficient(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(mzbell::displacement_coefficient(n, n + 3, 3.8));
}
BENCHMARK(BM_DisplacementCoefficient)->Arg(1)->Arg(20)->Arg(60);

}  // namespace
