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
#include <stdexcept>
#include <string>

namespace pjpeg {

namespace {

// Cone-like mixtures of linear RGB; rows sum to one so gray stays gray.
constexpr double kMix[3][3] = {
    {0.60, 0.35, 0.05},  // L
    {0.30, 0.65, 0.05},  // M
    {0.06, 0.10, 0.84},  // S
};
// Offset of the cube-root response; keeps the slope finite at black.
constexpr double kResponseOffset = 0.01;
// Blue-yellow differences are divided by 1 + kBlueMaskingByYellow * mean
// linear (R + G) / 2 of the reference block.
constexpr double kBlueMaskingByYellow = 2.0;
// Activity-to-mask gains. Chroma masks also see half the intensity activity.
constexpr double kLowMaskGain = 30.0;
constexpr double kHighMaskGain = 45.0;
constexpr double kCrossActivity = 0.5;
// Global scale of the distance.
constexpr double kDistanceScale = 30.0;

const double kCubeRootOffset = std::cbrt(kResponseOffset);

double SrgbToLinear(double s) {
  return s <= 0.04045 ? s / 12.92 : std::pow((s + 0.055) / 1.055, 2.4);
}

double SrgbToLinearSlope(double s) {
  return s <= 0.04045 ? 1.0 / 12.92
                      : 2.4 / 1.055 * std::pow((s + 0.055) / 1.055, 1.4);
}

double Response(double m) { return std::cbrt(m + kResponseOffset) - kCubeRootOffset; }

double ResponseSlope(double m) {
  return 1.0 / (3.0 * std::pow(m + kResponseOffset, 2.0 / 3.0));
}

// d(Y, Cb, Cr -> R, G, B) per unit of each YCbCr component.
constexpr double kYuvToRgbColumns[3][3] = {
    {1.0, 1.0, 1.0},
    {0.0, -0.344136286, 1.772},
    {1.402, -0.714136286, 0.0},
};

struct WeightTable {
  std::array<std::array<double, kDctBlockSize>, 3> w;
  WeightTable() {
    for (int o = 0; o < 3; ++o) {
      for (int k = 0; k < kDctBlockSize; ++k) {
        w[o][k] = FrequencyWeight(static_cast<OpponentChannel>(o), k % 8, k / 8);
      }
    }
  }
};

const WeightTable& Weights() {
  static const WeightTable table;
  return table;
}

int BlocksFor(int n) { return (n + 7) / 8; }

}  // namespace

OpponentImage OpponentTransform(const RgbImage& img) {
  OpponentImage out;
  out.width = img.width();
  out.height = img.height();
  for (auto& p : out.planes) p = Plane(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      double lin[3];
      for (int c = 0; c < 3; ++c) lin[c] = SrgbToLinear(img.at(x, y, c) / 255.0);
      double resp[3];
      for (int j = 0; j < 3; ++j) {
        resp[j] = Response(kMix[j][0] * lin[0] + kMix[j][1] * lin[1] +
                           kMix[j][2] * lin[2]);
      }
      const double intensity = 0.5 * (resp[0] + resp[1]);
      out.planes[kIntensity].at(x, y) = intensity;
      out.planes[kRedGreen].at(x, y) = resp[0] - resp[1];
      out.planes[kBlueYellow].at(x, y) = resp[2] - intensity;
    }
  }
  return out;
}

MaskBand BandOf(int natural_index) {
  return natural_index / 8 + natural_index % 8 <= 2 ? MaskBand::kLow
                                                     : MaskBand::kHigh;
}

double FrequencyWeight(OpponentChannel channel, double fu, double fv) {
  const double f2 = fu * fu + fv * fv;
  switch (channel) {
    case kIntensity:
      return 1.0 / (1.0 + 0.02 * f2);
    case kRedGreen:
      return 1.5 / (1.0 + 0.08 * f2);
    case kBlueYellow:
      return 1.0 / (1.0 + 0.3 * f2);
  }
  return 0.0;
}

MaskMap ComputeMasks(const OpponentImage& ref) {
  MaskMap masks;
  masks.width_in_blocks = BlocksFor(ref.width);
  masks.height_in_blocks = BlocksFor(ref.height);
  const size_t n =
      static_cast<size_t>(masks.width_in_blocks) * masks.height_in_blocks;
  masks.low.resize(n);
  masks.high.resize(n);
  for (int by = 0; by < masks.height_in_blocks; ++by) {
    for (int bx = 0; bx < masks.width_in_blocks; ++bx) {
      const int x0 = bx * 8, x1 = std::min(x0 + 8, ref.width);
      const int y0 = by * 8, y1 = std::min(y0 + 8, ref.height);
      const double count = static_cast<double>((x1 - x0) * (y1 - y0));
      // RMS deviation from the block mean equals the RMS of the AC
      // coefficients of an orthonormal DCT.
      std::array<double, 3> activity;
      for (int o = 0; o < 3; ++o) {
        const Plane& p = ref.planes[o];
        // Offsets from the first sample keep flat blocks exactly zero.
        const double origin = p.at(x0, y0);
        double sum = 0.0;
        for (int y = y0; y < y1; ++y) {
          for (int x = x0; x < x1; ++x) sum += p.at(x, y) - origin;
        }
        const double mean = sum / count;
        double energy = 0.0;
        for (int y = y0; y < y1; ++y) {
          for (int x = x0; x < x1; ++x) {
            const double d = p.at(x, y) - origin - mean;
            energy += d * d;
          }
        }
        activity[o] = std::sqrt(energy / count);
      }
      const size_t i = static_cast<size_t>(by) * masks.width_in_blocks + bx;
      for (int o = 0; o < 3; ++o) {
        const double a =
            activity[o] + (o == kIntensity ? 0.0 : kCrossActivity * activity[kIntensity]);
        masks.low[i][o] = std::min(kMaxMask, 1.0 + kLowMaskGain * a);
        masks.high[i][o] = std::min(kMaxMask, 1.0 + kHighMaskGain * a);
      }
    }
  }
  return masks;
}

double GlobalDistance(const DistanceMap& map) {
  if (map.values.empty()) throw std::invalid_argument("empty distance map");
  return *std::max_element(map.values.begin(), map.values.end());
}

PerceptualMetric::PerceptualMetric(const RgbImage& reference)
    : reference_(reference),
      masks_(ComputeMasks(OpponentTransform(reference))) {
  const int w = reference_.width();
  const int h = reference_.height();
  jacobian_.resize(reference_.pixel_count() * 9);
  for (int by = 0; by < masks_.height_in_blocks; ++by) {
    for (int bx = 0; bx < masks_.width_in_blocks; ++bx) {
      const int x0 = bx * 8, x1 = std::min(x0 + 8, w);
      const int y0 = by * 8, y1 = std::min(y0 + 8, h);
      double rg = 0.0;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          rg += 0.5 * (SrgbToLinear(reference_.at(x, y, 0) / 255.0) +
                       SrgbToLinear(reference_.at(x, y, 1) / 255.0));
        }
      }
      rg /= (x1 - x0) * (y1 - y0);
      const double blue_gain = 1.0 / (1.0 + kBlueMaskingByYellow * rg);

      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          double lin[3], dlin[3];
          for (int c = 0; c < 3; ++c) {
            const double s = reference_.at(x, y, c) / 255.0;
            lin[c] = SrgbToLinear(s);
            dlin[c] = SrgbToLinearSlope(s) / 255.0;
          }
          double dresp[3][3];  // [cone][rgb]
          for (int j = 0; j < 3; ++j) {
            const double slope = ResponseSlope(
                kMix[j][0] * lin[0] + kMix[j][1] * lin[1] + kMix[j][2] * lin[2]);
            for (int c = 0; c < 3; ++c) dresp[j][c] = slope * kMix[j][c] * dlin[c];
          }
          double* jac = &jacobian_[(static_cast<size_t>(y) * w + x) * 9];
          for (int c = 0; c < 3; ++c) {
            const double di = 0.5 * (dresp[0][c] + dresp[1][c]);
            jac[kIntensity * 3 + c] = di;
            jac[kRedGreen * 3 + c] = dresp[0][c] - dresp[1][c];
            jac[kBlueYellow * 3 + c] = (dresp[2][c] - di) * blue_gain;
          }
        }
      }
    }
  }
}

DistanceMap PerceptualMetric::Compare(const RgbImage& candidate) const {
  if (candidate.width() != reference_.width() ||
      candidate.height() != reference_.height()) {
    throw std::invalid_argument("candidate dimensions differ from reference");
  }
  const int w = reference_.width();
  const int h = reference_.height();
  const auto& weights = Weights().w;
  DistanceMap map;
  map.width_in_blocks = masks_.width_in_blocks;
  map.height_in_blocks = masks_.height_in_blocks;
  map.values.assign(
      static_cast<size_t>(map.width_in_blocks) * map.height_in_blocks, 0.0);

  const uint8_t* ref = reference_.samples().data();
  const uint8_t* cand = candidate.samples().data();
  for (int by = 0; by < map.height_in_blocks; ++by) {
    for (int bx = 0; bx < map.width_in_blocks; ++bx) {
      const int x0 = bx * 8, x1 = std::min(x0 + 8, w);
      const int y0 = by * 8, y1 = std::min(y0 + 8, h);
      std::array<DctBlock, 3> diff{};
      bool any = false;
      for (int y = y0; y < y1; ++y) {
        for (int x = x0; x < x1; ++x) {
          const size_t p = static_cast<size_t>(y) * w + x;
          const double dr = static_cast<double>(cand[p * 3]) - ref[p * 3];
          const double dg = static_cast<double>(cand[p * 3 + 1]) - ref[p * 3 + 1];
          const double db = static_cast<double>(cand[p * 3 + 2]) - ref[p * 3 + 2];
          if (dr == 0.0 && dg == 0.0 && db == 0.0) continue;
          any = true;
          const double* jac = &jacobian_[p * 9];
          const int k = (y - y0) * 8 + (x - x0);
          for (int o = 0; o < 3; ++o) {
            diff[o][k] = jac[o * 3] * dr + jac[o * 3 + 1] * dg + jac[o * 3 + 2] * db;
          }
        }
      }
      if (!any) continue;
      double energy = 0.0;
      for (int o = 0; o < 3; ++o) {
        const DctBlock coeffs = ForwardDct(diff[o]);
        const double mask_low = masks_.at(MaskBand::kLow, bx, by, o);
        const double mask_high = masks_.at(MaskBand::kHigh, bx, by, o);
        for (int k = 0; k < kDctBlockSize; ++k) {
          const double mask = BandOf(k) == MaskBand::kLow ? mask_low : mask_high;
          const double v = weights[o][k] * coeffs[k] / mask;
          energy += v * v;
        }
      }
      map.values[static_cast<size_t>(by) * map.width_in_blocks + bx] =
          kDistanceScale * std::sqrt(energy);
    }
  }
  return map;
}

std::array<double, 3> PerceptualMetric::MeanOpponentGain(int component, int x0,
                                                         int y0, int x1,
                                                         int y1) const {
  std::array<double, 3> gain{};
  const double* col = kYuvToRgbColumns[component];
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) {
      const double* jac = Jacobian(x, y);
      for (int o = 0; o < 3; ++o) {
        gain[o] += jac[o * 3] * col[0] + jac[o * 3 + 1] * col[1] +
                   jac[o * 3 + 2] * col[2];
      }
    }
  }
  const double count = static_cast<double>((x1 - x0) * (y1 - y0));
  for (double& g : gain) g /= count;
  return gain;
}

std::array<double, kDctBlockSize> PerceptualMetric::ComponentSensitivity(
    Sampling sampling, int component, int bx, int by) const {
  const bool subsampled = component > 0 && sampling == Sampling::kYuv420;
  // A 4:2:0 chroma block spans 2x2 metric blocks at half the frequency and,
  // after replication, twice the amplitude of an orthonormal coefficient.
  const int span = subsampled ? 2 : 1;
  const double freq_scale = subsampled ? 0.5 : 1.0;
  const double amplitude = subsampled ? 2.0 : 1.0;

  std::array<double, kDctBlockSize> out{};
  for (int my = by * span; my < std::min((by + 1) * span, height_in_blocks());
       ++my) {
    for (int mx = bx * span; mx < std::min((bx + 1) * span, width_in_blocks());
         ++mx) {
      const int x0 = mx * 8, x1 = std::min(x0 + 8, reference_.width());
      const int y0 = my * 8, y1 = std::min(y0 + 8, reference_.height());
      const auto gain = MeanOpponentGain(component, x0, y0, x1, y1);
      for (int k = 0; k < kDctBlockSize; ++k) {
        const double fu = (k % 8) * freq_scale;
        const double fv = (k / 8) * freq_scale;
        const MaskBand band = fu + fv <= 2.0 ? MaskBand::kLow : MaskBand::kHigh;
        double sum = 0.0;
        for (int o = 0; o < 3; ++o) {
          const double v = gain[o] *
                           FrequencyWeight(static_cast<OpponentChannel>(o), fu, fv) /
                           masks_.at(band, mx, my, o);
          sum += v * v;
        }
        out[k] = std::max(out[k], kDistanceScale * amplitude * std::sqrt(sum));
      }
    }
  }
  return out;
}

DistanceMap ComputeDistanceMap(const RgbImage& ref, const RgbImage& candidate) {
  if (ref.width() != candidate.width() || ref.height() != candidate.height()) {
    throw std::invalid_argument("candidate dimensions differ from reference");
  }
  return PerceptualMetric(ref).Compare(candidate);
}

namespace {

void WritePgm(int w, int h, const std::vector<uint8_t>& pixels,
              const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  out << "P5\n" << w << " " << h << "\n255\n";
  out.write(reinterpret_cast<const char*>(pixels.data()),
            static_cast<std::streamsize>(pixels.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

void WriteDistanceMapPgm(const DistanceMap& map,
                         const std::filesystem::path& path, double max_value) {
  if (max_value <= 0.0 && !map.values.empty()) max_value = GlobalDistance(map);
  std::vector<uint8_t> pixels(map.values.size());
  for (size_t i = 0; i < pixels.size(); ++i) {
    const double v = max_value > 0.0 ? map.values[i] / max_value : 0.0;
    pixels[i] = static_cast<uint8_t>(std::lround(255.0 * std::clamp(v, 0.0, 1.0)));
  }
  WritePgm(map.width_in_blocks, map.height_in_blocks, pixels, path);
}

void WriteMaskPgm(const MaskMap& masks, MaskBand band, int channel,
                  const std::filesystem::path& path) {
  const auto& v = band == MaskBand::kLow ? masks.low : masks.high;
  std::vector<uint8_t> pixels(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    const double t = (v[i][channel] - 1.0) / (kMaxMask - 1.0);
    pixels[i] = static_cast<uint8_t>(std::lround(255.0 * std::clamp(t, 0.0, 1.0)));
  }
  WritePgm(masks.width_in_blocks, masks.height_in_blocks, pixels, path);
}

}  // namespace pjpeg
