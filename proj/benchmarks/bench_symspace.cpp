// Copyright 2026 The symspace Authors
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

#include <benchmark/benchmark.h>

#include "symspace/flagcurve.hpp"
#include "symspace/fnspace.hpp"
#include "symspace/gf.hpp"
#include "symspace/psi.hpp"
#include "symspace/quadspace.hpp"
#include "symspace/quiverorb.hpp"
#include "symspace/random.hpp"

namespace {

using namespace symspace;

void BM_FieldMul(benchmark::State& state) {
  gf::FieldCtx F(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(1);
  std::vector<gf::FqElem> xs(1024);
  for (auto& x : xs) x = F.element(static_cast<std::uint32_t>(rng.below(F.q())));
  gf::FqElem acc = F.one();
  for (auto _ : state) {
    for (auto x : xs) acc = F.mul(F.add(acc, x), x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Args({7, 1})->Args({3, 4})->Args({5, 3});

void BM_QuadTransform(benchmark::State& state) {
  gf::FieldCtx F(static_cast<int>(state.range(0)));
  const auto Q = quadspace::standard_quadspace(F, static_cast<int>(state.range(1)), quadspace::FormType::split);
  const FnTable f = quadspace::f_ic(Q);
  for (auto _ : state) benchmark::DoNotOptimize(quadspace::fourier(Q, f));
}
BENCHMARK(BM_QuadTransform)->Args({3, 6})->Args({5, 5})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_OrbitCensus(benchmark::State& state) {
  gf::FieldCtx F(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quiverorb::orbit_census(F, 2, 2));
}
BENCHMARK(BM_OrbitCensus)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_PsiGl22(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psi::psi_gl22(static_cast<int>(state.range(0)), seed++));
}
BENCHMARK(BM_PsiGl22)->Arg(1)->Arg(8)->Arg(10);

void BM_PsiGlsp(benchmark::State& state) {
  const std::vector<int> lambda(static_cast<std::size_t>(state.range(0)), 1);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(psi::psi_glsp(lambda, seed++));
}
BENCHMARK(BM_PsiGlsp)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CurveCount(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0)), m = static_cast<int>(state.range(1));
  const auto Q = flagcurve::standard_quadric(p);
  const auto g = flagcurve::find_general_position(Q, 1);
  for (auto _ : state) benchmark::DoNotOptimize(flagcurve::count_E(Q, *g, m));
}
BENCHMARK(BM_CurveCount)->Args({7, 1})->Args({7, 2})->Args({11, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
