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


#include "pjpeg/metric.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <string>

#include "gtest/gtest.h"
#include "test_util.h"

namespace pjpeg {
namespace {

uint8_t Clamp8(int v) { return static_cast<uint8_t>(std::clamp(v, 0, 255)); }

RgbImage AddPerturbation(const RgbImage& ref, const std::vector<int>& delta,
                         double scale) {
  RgbImage out = ref;
  for (size_t i = 0; i < delta.size(); ++i) {
    out.mutable_samples()[i] =
        Clamp8(ref.samples()[i] + static_cast<int>(std::lround(scale * delta[i])));
  }
  return out;
}

RgbImage MidTexture(int w, int h, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(60, 195);
  RgbImage img(w, h);
  for (uint8_t& s : img.mutable_samples()) s = static_cast<uint8_t>(dist(rng));
  return img;
}

TEST(OpponentTest, GrayHasNoChroma) {
  for (int v : {0, 1, 77, 128, 254, 255}) {
    const OpponentImage o = OpponentTransform(testing::FlatImage(9, 5, v, v, v));
    for (double x : o.planes[kRedGreen].data) EXPECT_NEAR(x, 0.0, 1e-12);
    for (double x : o.planes[kBlueYellow].data) EXPECT_NEAR(x, 0.0, 1e-12);
  }
}

TEST(OpponentTest, Deterministic) {
  std::mt19937 rng(1);
  const RgbImage img = testing::UniformNoiseImage(17, 9, rng);
  const OpponentImage a = OpponentTransform(img);
  const OpponentImage b = OpponentTransform(img);
  for (int c = 0; c < 3; ++c) EXPECT_EQ(a.planes[c].data, b.planes[c].data);
}

TEST(OpponentTest, BlueStepIsLargerOnBlackThanOnYellow) {
  auto delta = [](uint8_t r, uint8_t g, uint8_t b) {
    const OpponentImage o0 = OpponentTransform(testing::FlatImage(1, 1, r, g, b));
    const OpponentImage o1 =
        OpponentTransform(testing::FlatImage(1, 1, r, g, b + 8));
    double s = 0.0;
    for (int c = 0; c < 3; ++c) {
      const double d = o1.planes[c].data[0] - o0.planes[c].data[0];
      s += d * d;
    }
    return std::sqrt(s);
  };
  EXPECT_GT(delta(0, 0, 0), delta(255, 255, 0));
}

TEST(MetricTest, SelfDistanceIsZero) {
  std::mt19937 rng(2);
  const RgbImage img = testing::UniformNoiseImage(40, 24, rng);
  const DistanceMap map = ComputeDistanceMap(img, img);
  EXPECT_EQ(map.width_in_blocks, 5);
  EXPECT_EQ(map.height_in_blocks, 3);
  for (double v : map.values) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(GlobalDistance(map), 0.0);
}

TEST(MetricTest, SignSymmetry) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RgbImage ref = MidTexture(32, 32, rng);
    std::vector<int> delta(ref.samples().size());
    std::uniform_int_distribution<int> d(-20, 20);
    for (int& v : delta) v = d(rng);
    const PerceptualMetric metric(ref);
    const double plus = metric.Distance(AddPerturbation(ref, delta, 1.0));
    const double minus = metric.Distance(AddPerturbation(ref, delta, -1.0));
    EXPECT_GT(plus, 0.0);
    EXPECT_NEAR(plus, minus, 1e-9 * plus);
  }
}

RgbImage WithBluePatch(uint8_t r, uint8_t g, uint8_t b, int amount) {
  RgbImage img = testing::FlatImage(32, 32, r, g, b);
  for (int y = 8; y < 16; ++y) {
    for (int x = 8; x < 16; ++x) img.at(x, y, 2) = Clamp8(b + amount);
  }
  return img;
}

TEST(MetricTest, BlueOnYellowIsLessVisibleThanOnBlack) {
  const double on_black = GlobalDistance(ComputeDistanceMap(
      testing::FlatImage(32, 32, 0, 0, 0), WithBluePatch(0, 0, 0, 8)));
  const double on_yellow = GlobalDistance(ComputeDistanceMap(
      testing::FlatImage(32, 32, 255, 255, 0), WithBluePatch(255, 255, 0, 8)));
  EXPECT_GT(on_black, on_yellow);
  EXPECT_GT(on_yellow, 0.0);
}

TEST(MetricTest, BlueSensitivityFallsAsRedGreenRises) {
  double previous = 1e300;
  for (int rg = 0; rg <= 240; rg += 40) {
    const double d = GlobalDistance(ComputeDistanceMap(
        testing::FlatImage(32, 32, rg, rg, 0), WithBluePatch(rg, rg, 0, 8)));
    EXPECT_LT(d, previous) << "rg " << rg;
    previous = d;
  }
}

TEST(MetricTest, TextureMasksNoise) {
  std::mt19937 rng(4);
  // Left 16 columns flat, right 16 columns a one-pixel checkerboard.
  RgbImage ref(32, 16);
  for (int y = 0; y < 16; ++y) {
    for (int x = 0; x < 32; ++x) {
      const uint8_t v = x < 16 ? 128 : ((x + y) % 2 ? 60 : 196);
      ref.SetPixel(x, y, v, v, v);
    }
  }
  std::vector<int> noise(8 * 8 * 3);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int& v : noise) v = d(rng);
  RgbImage cand = ref;
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 8; ++x) {
      for (int c = 0; c < 3; ++c) {
        const int n = noise[(y * 8 + x) * 3 + c];
        cand.at(x, y, c) = Clamp8(ref.at(x, y, c) + n);
        cand.at(x + 16, y, c) = Clamp8(ref.at(x + 16, y, c) + n);
      }
    }
  }
  const DistanceMap map = ComputeDistanceMap(ref, cand);
  EXPECT_GT(map.at(2, 0), 0.0);
  EXPECT_LT(map.at(2, 0), map.at(0, 0));

  const MaskMap masks = ComputeMasks(OpponentTransform(ref));
  for (MaskBand band : {MaskBand::kLow, MaskBand::kHigh}) {
    EXPECT_GT(masks.at(band, 2, 0, kIntensity), masks.at(band, 0, 0, kIntensity));
  }
}

TEST(MetricTest, BlueCheckerboardIsAttenuatedRelativeToGreen) {
  const RgbImage ref = testing::FlatImage(32, 32, 128, 128, 128);
  auto checker = [&](int channel) {
    RgbImage c = ref;
    for (int y = 0; y < 32; ++y) {
      for (int x = 0; x < 32; ++x) c.at(x, y, channel) = (x + y) % 2 ? 138 : 118;
    }
    return GlobalDistance(ComputeDistanceMap(ref, c));
  };
  EXPECT_LT(checker(2), checker(1));
}

TEST(MetricTest, MonotoneInAmplitude) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const RgbImage ref = trial % 2 ? MidTexture(24, 24, rng)
                                   : testing::UniformNoiseImage(24, 24, rng);
    std::vector<int> delta(ref.samples().size());
    std::uniform_int_distribution<int> d(-10, 10);
    for (int& v : delta) v = d(rng);
    const PerceptualMetric metric(ref);
    double previous = 0.0;
    for (double k : {1.0, 2.0, 3.0, 4.0}) {
      const double dist = metric.Distance(AddPerturbation(ref, delta, k));
      EXPECT_GE(dist, previous) << "trial " << trial << " k " << k;
      previous = dist;
    }
  }
}

TEST(MetricTest, MasksComeFromReferenceOnly) {
  std::mt19937 rng(6);
  const RgbImage flat = testing::FlatImage(16, 16, 120, 130, 110);
  const RgbImage busy = MidTexture(16, 16, rng);
  const PerceptualMetric metric(flat);
  const MaskMap before = metric.masks();
  metric.Compare(busy);
  metric.Compare(testing::UniformNoiseImage(16, 16, rng));
  EXPECT_EQ(metric.masks().low, before.low);
  EXPECT_EQ(metric.masks().high, before.high);
  const MaskMap direct = ComputeMasks(OpponentTransform(flat));
  EXPECT_EQ(direct.low, before.low);
  EXPECT_EQ(direct.high, before.high);
  // Swapping roles swaps which image provides the masks.
  EXPECT_NE(GlobalDistance(ComputeDistanceMap(flat, busy)),
            GlobalDistance(ComputeDistanceMap(busy, flat)));
}

TEST(MaskTest, ConstantImageHasUnitMasks) {
  const MaskMap m = ComputeMasks(OpponentTransform(
      testing::FlatImage(33, 17, 10, 200, 90)));
  EXPECT_EQ(m.width_in_blocks, 5);
  EXPECT_EQ(m.height_in_blocks, 3);
  for (const auto& v : m.low) {
    for (double x : v) EXPECT_DOUBLE_EQ(x, 1.0);
  }
  for (const auto& v : m.high) {
    for (double x : v) EXPECT_DOUBLE_EQ(x, 1.0);
  }
}

TEST(MaskTest, WhiteNoiseHitsCap) {
  std::mt19937 rng(7);
  const MaskMap m =
      ComputeMasks(OpponentTransform(testing::UniformNoiseImage(64, 64, rng)));
  for (const auto& v : m.high) {
    for (double x : v) EXPECT_DOUBLE_EQ(x, kMaxMask);
  }
  double low_max = 0.0;
  for (const auto& v : m.low) {
    for (double x : v) {
      EXPECT_LE(x, kMaxMask);
      EXPECT_GT(x, 4.0);
      low_max = std::max(low_max, x);
    }
  }
  EXPECT_DOUBLE_EQ(low_max, kMaxMask);
}

TEST(MaskTest, BandSplit) {
  EXPECT_EQ(BandOf(0), MaskBand::kLow);
  EXPECT_EQ(BandOf(2), MaskBand::kLow);
  EXPECT_EQ(BandOf(9), MaskBand::kLow);
  EXPECT_EQ(BandOf(16), MaskBand::kLow);
  EXPECT_EQ(BandOf(3), MaskBand::kHigh);
  EXPECT_EQ(BandOf(17), MaskBand::kHigh);
  EXPECT_EQ(BandOf(63), MaskBand::kHigh);
}

TEST(MaskTest, FrequencyWeightsDecreaseAndBlueFallsFastest) {
  for (int ch = 0; ch < 3; ++ch) {
    const auto c = static_cast<OpponentChannel>(ch);
    for (int f = 1; f < 8; ++f) {
      EXPECT_LT(FrequencyWeight(c, f, f), FrequencyWeight(c, f - 1, f - 1));
    }
  }
  EXPECT_LT(FrequencyWeight(kBlueYellow, 7, 7) / FrequencyWeight(kBlueYellow, 0, 0),
            FrequencyWeight(kIntensity, 7, 7) / FrequencyWeight(kIntensity, 0, 0));
}

TEST(GlobalDistanceTest, MaxAggregation) {
  DistanceMap map{3, 1, {0.1, 0.9, 0.4}};
  EXPECT_EQ(GlobalDistance(map), 0.9);
  std::mt19937 rng(8);
  for (int i = 0; i < 10; ++i) {
    std::shuffle(map.values.begin(), map.values.end(), rng);
    EXPECT_EQ(GlobalDistance(map), 0.9);
  }
  EXPECT_EQ(GlobalDistance(DistanceMap{2, 2, {0, 0, 0, 0}}), 0.0);
  EXPECT_THROW(GlobalDistance(DistanceMap{}), std::invalid_argument);
}

TEST(MetricTest, DimensionMismatchThrows) {
  EXPECT_THROW(ComputeDistanceMap(RgbImage(8, 8), RgbImage(9, 8)),
               std::invalid_argument);
  EXPECT_THROW(PerceptualMetric(RgbImage(8, 8)).Compare(RgbImage(8, 16)),
               std::invalid_argument);
}

TEST(MetricTest, HeatmapPgm) {
  const DistanceMap map{3, 2, {0.0, 1.0, 2.0, 0.5, 0.25, 4.0}};
  const auto path = std::filesystem::temp_directory_path() / "pjpeg_heatmap.pgm";
  WriteDistanceMapPgm(map, path);
  std::ifstream in(path, std::ios::binary);
  std::string magic;
  int w, h, maxval;
  in >> magic >> w >> h >> maxval;
  in.get();
  std::string pixels(6, '\0');
  in.read(pixels.data(), 6);
  EXPECT_EQ(magic, "P5");
  EXPECT_EQ(w, 3);
  EXPECT_EQ(h, 2);
  EXPECT_EQ(maxval, 255);
  EXPECT_EQ(static_cast<uint8_t>(pixels[0]), 0);
  EXPECT_EQ(static_cast<uint8_t>(pixels[5]), 255);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace pjpeg
