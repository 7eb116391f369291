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


#include <random>

#include "benchmark/benchmark.h"
#include "pjpeg/dct.h"
#include "pjpeg/image_io.h"
#include "pjpeg/jpeg.h"
#include "pjpeg/quant_tables.h"

namespace pjpeg {
namespace {

const RgbImage& Photo() {
  static const RgbImage img = LoadImage(PJPEG_BENCH_CORPUS "/astronaut.png");
  return img;
}

void BM_ForwardDct(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> dist(-128.0, 127.0);
  DctBlock block;
  for (double& v : block) v = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(ForwardDct(block));
}
BENCHMARK(BM_ForwardDct);

void BM_InverseDct(benchmark::State& state) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> dist(-500.0, 500.0);
  DctBlock block;
  for (double& v : block) v = dist(rng);
  for (auto _ : state) benchmark::DoNotOptimize(InverseDct(block));
}
BENCHMARK(BM_InverseDct);

void BM_ForwardTransform(benchmark::State& state) {
  const QuantTable q = QualityTable(90);
  const auto sampling = static_cast<Sampling>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ForwardTransform(Photo(), q, sampling));
  state.SetItemsProcessed(state.iterations() * Photo().pixel_count());
}
BENCHMARK(BM_ForwardTransform)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EntropyEncode(benchmark::State& state) {
  const CoeffImage coeffs = ForwardTransform(Photo(), QualityTable(state.range(0)),
                                             Sampling::kYuv444);
  size_t bytes = 0;
  for (auto _ : state) {
    const EncodedJpeg jpeg = EntropyEncode(coeffs);
    bytes = jpeg.size();
    benchmark::DoNotOptimize(jpeg);
  }
  state.counters["jpeg_bytes"] = static_cast<double>(bytes);
}
BENCHMARK(BM_EntropyEncode)->Arg(50)->Arg(90)->Unit(benchmark::kMillisecond);

void BM_Decode(benchmark::State& state) {
  const EncodedJpeg jpeg = EncodeImage(Photo(), QualityTable(90), Sampling::kYuv444);
  for (auto _ : state) benchmark::DoNotOptimize(Decode(jpeg.bytes));
  state.SetBytesProcessed(state.iterations() * jpeg.size());
}
BENCHMARK(BM_Decode)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pjpeg
