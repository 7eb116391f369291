// Copyright 2026 The pjpeg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "benchmark/benchmark.h"
#include "pjpeg/image_io.h"
#include "pjpeg/optimizer.h"

namespace pjpeg {
namespace {

const RgbImage& Photo() {
  static const RgbImage img = LoadImage(PJPEG_BENCH_CORPUS "/rocket.png");
  return img;
}

void BM_RankCoefficients(benchmark::State& state) {
  const PerceptualMetric metric(Photo());
  const CoeffImage coeffs =
      ForwardTransform(Photo(), BuildTableSet(16)[7], Sampling::kYuv444);
  for (auto _ : state) benchmark::DoNotOptimize(RankCoefficients(coeffs, metric));
}
BENCHMARK(BM_RankCoefficients)->Unit(benchmark::kMillisecond);

void BM_EvaluateCandidate(benchmark::State& state) {
  const PerceptualMetric metric(Photo());
  const CoeffImage coeffs =
      ForwardTransform(Photo(), BuildTableSet(16)[7], Sampling::kYuv444);
  for (auto _ : state) {
    benchmark::DoNotOptimize(EvaluateCandidate(coeffs, metric, Provenance{}));
  }
}
BENCHMARK(BM_EvaluateCandidate)->Unit(benchmark::kMillisecond);

void BM_EncodePerceptual(benchmark::State& state) {
  OptimizerConfig cfg;
  cfg.target_distance = 1.0;
  cfg.max_local_iterations = static_cast<int>(state.range(0));
  size_t bytes = 0;
  for (auto _ : state) {
    const PerceptualResult r = EncodePerceptual(Photo(), cfg);
    bytes = r.best.size();
    benchmark::DoNotOptimize(r);
  }
  state.counters["jpeg_bytes"] = static_cast<double>(bytes);
}
BENCHMARK(BM_EncodePerceptual)
    ->Arg(0)
    ->Arg(10)
    ->Arg(30)
    ->Unit(benchmark::kMillisecond)
    ->Iterations(1);

}  // namespace
}  // namespace pjpeg
