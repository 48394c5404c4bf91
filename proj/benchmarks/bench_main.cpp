// Copyright 2026 The cvsep Authors
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

#include "cvsep/criteria.hpp"
#include "cvsep/statezoo.hpp"

namespace {

cvsep::CovMat4 sample_state() {
  return cvsep::statezoo::make(cvsep::statezoo::RandomPhysical{7});
}

void BM_HermitianPsd(benchmark::State& state) {
  // V + (i/2) diag(J, -J): the partial-transpose test, an 8x8 Jacobi solve.
  const auto v = sample_state();
  cvsep::Mat4 y;
  y(0, 1) = 0.5;
  y(1, 0) = -0.5;
  y(2, 3) = -0.5;
  y(3, 2) = 0.5;
  const cvsep::HermMat4 h(v.matrix(), y);
  for (auto _ : state) benchmark::DoNotOptimize(cvsep::is_psd_herm(h));
}
BENCHMARK(BM_HermitianPsd);

void BM_StandardForm(benchmark::State& state) {
  const auto v = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(cvsep::to_standard_form(v));
}
BENCHMARK(BM_StandardForm);

void BM_Classify(benchmark::State& state) {
  const auto v = sample_state();
  for (auto _ : state) benchmark::DoNotOptimize(cvsep::classify(v));
}
BENCHMARK(BM_Classify);

void BM_OptimalSqueeze(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cvsep::optimal_squeeze(1.5, 0.8, 0.4));
}
BENCHMARK(BM_OptimalSqueeze);

void BM_SimonBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cvsep::simon_c1_bound(1.5, 0.8, 0.4));
}
BENCHMARK(BM_SimonBound);

void BM_DefaultGridBounds(benchmark::State& state) {
  const double vals[] = {0.5, 0.75, 1.0, 1.5, 2.0, 5.0};
  for (auto _ : state) {
    double acc = 0.0;
    for (double a : vals)
      for (double b : vals)
        for (int k = 0; k <= 10; ++k) {
          const double t = k / 10.0;
          const auto sol = cvsep::optimal_squeeze(a, b, t);
          acc += sol.c1_bound + cvsep::simon_c1_bound(a, b, t) +
                 cvsep::duan_bound_at(a, b, t, sol.params);
        }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_DefaultGridBounds);

}  // namespace

BENCHMARK_MAIN();
