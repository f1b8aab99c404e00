// Copyright 2026 The stochan Authors
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


// Serial references against their OpenMP counterparts. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "stochan/diamond.hpp"
#include "stochan/random.hpp"
#include "stochan/stochastic.hpp"
#include "stochan/twirl.hpp"

namespace {

using namespace stochan;

template <Channel (*Twirl)(const Channel&, const UnitaryDesign&)>
void BM_Twirl(benchmark::State& state) {
  const auto d = static_cast<Index>(state.range(0));
  Rng rng = make_rng(1);
  const Channel phi = random_channel(d, rng);
  const UnitaryDesign mu = weyl_heisenberg_design(d);
  for (auto _ : state) benchmark::DoNotOptimize(Twirl(phi, mu));
}
BENCHMARK_TEMPLATE(BM_Twirl, twirl_choi_serial)->DenseRange(3, 6);
BENCHMARK_TEMPLATE(BM_Twirl, twirl_choi)->DenseRange(3, 6);
BENCHMARK_TEMPLATE(BM_Twirl, twirl_definition_serial)->DenseRange(3, 6);
BENCHMARK_TEMPLATE(BM_Twirl, twirl_definition)->DenseRange(3, 6);

template <Eigen::MatrixXd (*Schur)(const sdp::Problem&, const sdp::BlockMatrix&,
                                   const sdp::BlockMatrix&)>
void BM_Schur(benchmark::State& state) {
  const auto d = static_cast<Index>(state.range(0));
  Rng rng = make_rng(2);
  const sdp::Problem p = build_watrous_sdp(SdpProblem::for_channel(random_channel(d, rng)));
  sdp::BlockMatrix x;
  sdp::BlockMatrix w;
  for (const int n : p.block_sizes) {
    const Eigen::MatrixXd a = Eigen::MatrixXd::Random(n, n);
    x.push_back(a * a.transpose() + Eigen::MatrixXd::Identity(n, n));
    w.push_back(a.transpose() * a + Eigen::MatrixXd::Identity(n, n));
  }
  for (auto _ : state) benchmark::DoNotOptimize(Schur(p, x, w));
  state.counters["constraints"] = double(p.a.size());
}
BENCHMARK_TEMPLATE(BM_Schur, sdp::schur_complement_serial)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Schur, sdp::schur_complement)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SearchSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_nonunital_serial(3, 1, 4));
}
void BM_SearchParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_nonunital(3, 1, 4));
}
BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
