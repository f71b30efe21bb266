// Copyright 2026 The quatbranch Authors
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

#include "quatbranch/defects.hpp"
#include "quatbranch/existence.hpp"
#include "quatbranch/geometry.hpp"
#include "quatbranch/tree.hpp"

namespace {

using qb::GF2Field;
using qb::Series;

void BM_SeriesMul(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(static_cast<int>(state.range(0)));
  const Series a = qb::parse_series(f, "t^-7 + t^-3 + 1 + t^2 + t^5 + t^11 + t^20");
  const Series b = qb::parse_series(f, "t^-2 + t + t^4 + t^9 + t^13 + t^30");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(1)->Arg(3);

void BM_AsDefect(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  const Series a = qb::parse_series(f, "t^-21 + t^-14 + t^-9 + t^-6 + t^-3 + t^-2 + 1 + t^4");
  for (auto _ : state) benchmark::DoNotOptimize(qb::as_defect(a));
}
BENCHMARK(BM_AsDefect);

void BM_WindowEnumerate(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  for (auto _ : state) benchmark::DoNotOptimize(qb::Window::enumerate(f, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WindowEnumerate)->Arg(4)->Arg(8);

void BM_Membership(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  const qb::Window w = qb::Window::enumerate(f, 8);
  const qb::Mat2 q = qb::parse_mat2(f, "[[t^-1, t^-2 + 1 + t],[1, t^-1 + t]]");
  for (auto _ : state) benchmark::DoNotOptimize(qb::oracle_branch(q, w));
}
BENCHMARK(BM_Membership);

void BM_MeasureIntersection(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  const qb::TreeOracle orc(f, 8, 2);
  const qb::Mat2 q1 = qb::parse_mat2(f, "[[1,0],[0,0]]");
  const qb::Mat2 q2 = qb::parse_mat2(f, "[[t^-1, t^-2 + 1 + t],[1, t^-1 + t]]");
  for (auto _ : state) benchmark::DoNotOptimize(orc.measure_intersection(q1, q2));
}
BENCHMARK(BM_MeasureIntersection);

void BM_PredictRelpos(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  const qb::PairConfig pc = qb::make_pair(qb::parse_mat2(f, "[[1,0],[0,0]]"),
                                          qb::parse_mat2(f, "[[t^-1, t^-2 + 1 + t],[1, t^-1 + t]]"));
  for (auto _ : state) benchmark::DoNotOptimize(qb::predict_relpos(pc));
}
BENCHMARK(BM_PredictRelpos);

void BM_Decide(benchmark::State& state) {
  const GF2Field& f = GF2Field::standard(1);
  auto S = [&](const char* s) { return qb::parse_series(f, s); };
  const qb::AlgebraSpec spec = qb::AlgebraSpec::make(S("0"), qb::classify(S("1"), S("1")), qb::classify(S("0"), S("t")));
  for (auto _ : state) benchmark::DoNotOptimize(qb::decide(spec));
}
BENCHMARK(BM_Decide);

}  // namespace

BENCHMARK_MAIN();
