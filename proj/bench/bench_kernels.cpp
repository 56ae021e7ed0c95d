// Copyright 2026 The nevlab Authors.
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

// Serial reference path against the OpenMP path for the data-parallel kernels.

#include <benchmark/benchmark.h>

#include "nevlab/nevanlinna.hpp"
#include "nevlab/position_geometry.hpp"
#include "nevlab/zeros.hpp"

using namespace nevlab;

namespace {

kernels::Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Exec::Serial : kernels::Exec::Parallel;
}

Curve exp_curve() {
  return Curve({parse_function("1"), parse_function("exp(z)"), parse_function("z^3 - 2*z + 1")});
}

void BM_CircleQuadrature(benchmark::State& state) {
  Curve c = exp_curve();
  NevanlinnaOptions o;
  o.exec = exec_of(state);
  o.quad_tol = 1e-12;
  for (auto _ : state) benchmark::DoNotOptimize(characteristic(c, 30.0, o).value);
}
BENCHMARK(BM_CircleQuadrature)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_Profile(benchmark::State& state) {
  Curve c = exp_curve();
  std::vector<Hypersurface> qs = {Hypersurface(parse_homog_poly("x0 + x1 + x2", 3)),
                                  Hypersurface(parse_homog_poly("x1^2 - x0*x2 + 3*x0^2", 3))};
  RadialGrid g = RadialGrid::geometric(1.0, 12.0, 16, 0.25, c.R);
  NevanlinnaOptions o;
  o.exec = exec_of(state);
  o.zeros.exec = o.exec;
  for (auto _ : state) benchmark::DoNotOptimize(nevanlinna_profile(c, qs, g, 2, o).T.back());
}
BENCHMARK(BM_Profile)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_Winding(benchmark::State& state) {
  AnalyticFunction g = parse_function("exp(z) - 1");
  ZeroOptions o;
  o.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(winding_number(g, 0.0, 20.0, o).count);
}
BENCHMARK(BM_Winding)->Arg(0)->Arg(1)->ArgName("parallel");

HypersurfaceFamily lines(std::size_t q) {
  HypersurfaceFamily f;
  const char* forms[] = {"x0 + x1 + 2*x2 - x3", "x1 - 3*x2 + x3",  "2*x0 - x1 + x3",    "x0 + 5*x2 + 7*x3",
                         "x0 - x1 - x2 - x3",   "3*x0 + x1 + x2",  "x2 + 4*x3 - x0",    "x0 + 2*x1 + 3*x2 + 4*x3",
                         "5*x1 - x3",           "x0 + x3",         "7*x0 - 2*x1 + x2", "x1 + x2 + 9*x3"};
  for (std::size_t j = 0; j < q; ++j) f.members.emplace_back(parse_homog_poly(forms[j], 4));
  return f;
}

void BM_Distributive(benchmark::State& state) {
  Variety v = Variety::projective_space(3);
  HypersurfaceFamily f = lines(10);
  PositionOptions o;
  o.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(distributive_constant(v, f, o).value);
}
BENCHMARK(BM_Distributive)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_DistributiveReference(benchmark::State& state) {
  Variety v = Variety::projective_space(3);
  HypersurfaceFamily f = lines(10);
  PositionOptions o;
  o.exec = kernels::Exec::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(distributive_constant_reference(v, f, o).value);
}
BENCHMARK(BM_DistributiveReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
