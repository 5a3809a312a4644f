/*
 * Copyright 2026 The lauricella Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "lauricella/lauricella.hpp"

using namespace lauricella;

namespace {

ParameterSet params(int m) {
  ParameterSet p{{0.31, 0.05}, {0.43, -0.1}, {}};
  const Complex c[] = {0.67, {0.84, 0.1}, 0.59, 1.37};
  p.c.assign(c, c + m);
  return p;
}

EvaluationPoint point(int m, double x) {
  return EvaluationPoint{std::vector<Complex>(static_cast<std::size_t>(m), x)};
}

void BM_EvalFc(benchmark::State &state) {
  const int m = static_cast<int>(state.range(0));
  const auto p = params(m);
  const auto x = point(m, 0.05);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_fc(p, x));
  }
}
BENCHMARK(BM_EvalFc)->DenseRange(1, 4);

void BM_LogGamma(benchmark::State &state) {
  Complex z{-1.3, 0.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex{1e-9, 0.0};
  }
}
BENCHMARK(BM_LogGamma);

void BM_Tpr1Reduced(benchmark::State &state) {
  const int m = static_cast<int>(state.range(0));
  const auto p = params(m);
  const auto x = point(m, 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tpr1_reduced(p, x));
  }
}
BENCHMARK(BM_Tpr1Reduced)->DenseRange(1, 3);

void BM_FlagSum(benchmark::State &state) {
  const auto p = params(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flag_sum(p));
  }
}
BENCHMARK(BM_FlagSum);

void BM_EulerIntegral(benchmark::State &state) {
  const auto p = ParameterSet::make(1, 0.2, 0.3, {0.9});
  for (auto _ : state) {
    benchmark::DoNotOptimize(euler_integral_m1(p, 0.05));
  }
}
BENCHMARK(BM_EulerIntegral);

void BM_PdeResidual(benchmark::State &state) {
  const auto p = params(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pde_residual(p, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_PdeResidual)->Arg(10)->Arg(15);

} // namespace

BENCHMARK_MAIN();
