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
#include "pjpeg/jpeg.h"
#include "pjpeg/metric.h"
#include "pjpeg/quant_tables.h"

namespace pjpeg {
namespace {

const RgbImage& Photo() {
  static const RgbImage img = LoadImage(PJPEG_BENCH_CORPUS "/coffee.png");
  return img;
}

void BM_OpponentTransform(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(OpponentTransform(Photo()));
}
BENCHMARK(BM_OpponentTransform)->Unit(benchmark::kMillisecond);

void BM_BuildMetric(benchmark::State& state) {
  for (auto _ : state) {
    PerceptualMetric metric(Photo());
    benchmark::DoNotOptimize(metric);
  }
}
BENCHMARK(BM_BuildMetric)->Unit(benchmark::kMillisecond);

void BM_Compare(benchmark::State& state) {
  const PerceptualMetric metric(Photo());
  const RgbImage candidate =
      Decode(EncodeImage(Photo(), QualityTable(80), Sampling::kYuv444).bytes).pixels;
  for (auto _ : state) benchmark::DoNotOptimize(metric.Compare(candidate));
  state.SetItemsProcessed(state.iterations() * Photo().pixel_count());
}
BENCHMARK(BM_Compare)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pjpeg
