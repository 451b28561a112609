// Copyright 2026 The partid Authors.
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

// Serial reference vs OpenMP variant for each kernel.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "partid/kernels.hpp"
#include "partid/rational.hpp"

using namespace partid;

namespace {

// Distinct points k / grain on the simplex in n states.
std::vector<Vector> SimplexCloud(std::size_t n, std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(0, 8);
  std::vector<Vector> pts;
  while (pts.size() < count) {
    std::vector<long> k(n);
    long total = 0;
    for (auto& x : k) total += x = pick(rng);
    if (total == 0) continue;
    Vector p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = Rational(k[i], total);
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

kernels::RiskTensor Tensor(std::size_t priors, std::size_t signals, std::size_t actions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick(0, 12);
  kernels::RiskTensor t(priors, signals, actions);
  for (std::size_t v = 0; v < priors; ++v) {
    for (std::size_t y = 0; y < signals; ++y) {
      for (std::size_t a = 0; a < actions; ++a) t(v, y, a) = Rational(pick(rng), 6);
    }
  }
  return t;
}

template <auto Kernel>
void BM_ExtremeMask(benchmark::State& state) {
  const auto pts = SimplexCloud(4, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(pts));
}

template <auto Kernel>
void BM_EdgeMask(benchmark::State& state) {
  auto pts = SimplexCloud(3, static_cast<std::size_t>(state.range(0)), 13);
  const auto mask = kernels::ExtremeMaskSerial(pts);
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (mask[i]) vs.push_back(pts[i]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) pairs.emplace_back(i, j);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(vs, pairs));
}

template <auto Kernel>
void BM_MinimaxRule(benchmark::State& state) {
  const auto risk = Tensor(8, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(risk));
}

}  // namespace

BENCHMARK(BM_ExtremeMask<kernels::ExtremeMaskSerial>)->Name("ExtremeMask/serial")->Arg(16)->Arg(48);
BENCHMARK(BM_ExtremeMask<kernels::ExtremeMaskParallel>)->Name("ExtremeMask/parallel")->Arg(16)->Arg(48)->UseRealTime();
BENCHMARK(BM_EdgeMask<kernels::EdgeMaskSerial>)->Name("EdgeMask/serial")->Arg(24)->Arg(60);
BENCHMARK(BM_EdgeMask<kernels::EdgeMaskParallel>)->Name("EdgeMask/parallel")->Arg(24)->Arg(60)->UseRealTime();
BENCHMARK(BM_MinimaxRule<kernels::MinimaxRuleSerial>)->Name("MinimaxRule/serial")->Arg(4)->Arg(7);
BENCHMARK(BM_MinimaxRule<kernels::MinimaxRuleParallel>)->Name("MinimaxRule/parallel")->Arg(4)->Arg(7)->UseRealTime();

BENCHMARK_MAIN();
