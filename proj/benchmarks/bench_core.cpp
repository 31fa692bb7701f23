// Copyright 2026 The yhk Authors.
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

#include "yhk/crystal.hpp"
#include "yhk/pbw.hpp"
#include "yhk/quotient.hpp"
#include "yhk/rep.hpp"

namespace {

using namespace yhk;

PbwElement random_monomial(std::mt19937_64& rng, const AlgebraSpec& s) {
  std::uniform_int_distribution<int> ex(-2, 2), be(0, s.r - 1);
  auto perms = all_perms(s.n);
  std::uniform_int_distribution<std::size_t> pw(0, perms.size() - 1);
  std::vector<int> a(static_cast<std::size_t>(s.n)), b(static_cast<std::size_t>(s.n));
  for (auto& x : a) x = ex(rng);
  for (auto& x : b) x = be(rng);
  return monomial_element(s, a, b, perms[pw(rng)]);
}

void BM_MultMonomials(benchmark::State& state) {
  AlgebraSpec s{static_cast<int>(state.range(0)), static_cast<int>(state.range(1))};
  std::mt19937_64 rng(1);
  std::vector<std::pair<PbwElement, PbwElement>> pairs;
  for (int i = 0; i < 16; ++i) pairs.emplace_back(random_monomial(rng, s), random_monomial(rng, s));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(mult(a, b));
  }
}
BENCHMARK(BM_MultMonomials)->Args({2, 2})->Args({2, 3})->Args({3, 3})->Args({2, 4});

void BM_LongestElementSquare(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  AlgebraSpec s{2, n};
  Perm w0 = all_perms(n).back();
  PbwElement g = gen_gw(s, w0);
  for (auto _ : state) benchmark::DoNotOptimize(mult(g, g));
}
BENCHMARK(BM_LongestElementSquare)->DenseRange(2, 4);

void BM_ReduceXPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  AlgebraSpec s{2, n};
  WeightDatum lam = WeightDatum::parse_charges("0,1");
  PbwElement a = gen_X(s, n, 3);
  for (auto _ : state) {
    CyclotomicQuotient quo(s, lam);
    benchmark::DoNotOptimize(quo.reduce(a));
  }
}
BENCHMARK(BM_ReduceXPower)->DenseRange(2, 3);

void BM_RegularRepresentation(benchmark::State& state) {
  WeightDatum lam = WeightDatum::parse_charges("0");
  for (auto _ : state) benchmark::DoNotOptimize(regular_representation(lam, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RegularRepresentation)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_SimpleModule(benchmark::State& state) {
  WeightDatum lam = WeightDatum::parse_charges("0");
  for (auto _ : state) benchmark::DoNotOptimize(simple_module({2, 2}, {{2}, {1, 1}}, lam));
}
BENCHMARK(BM_SimpleModule)->Unit(benchmark::kMillisecond);

void BM_TensorCrystal(benchmark::State& state) {
  WeightDatum lam = WeightDatum::parse_charges("0");
  for (auto _ : state) benchmark::DoNotOptimize(tensor_crystal(lam, 2, 3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TensorCrystal)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
