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

// Simplified psychovisual distance.
//
// Pixels are decoded from sRGB to linear light, mixed into three cone-like
// responses and compressed with a cube-root nonlinearity. The opponent
// planes are built from the compressed responses:
//   intensity   = (L + M) / 2
//   red_green   = L - M
//   blue_yellow = S - intensity
// Because the nonlinearity acts on mixtures, the sensitivity of every plane
// to a change in one RGB channel depends on the other channels.
//
// A candidate is compared to the reference by linearizing the opponent
// transform at the reference pixel, projecting the RGB difference into
// opponent space, taking the 8x8 DCT of each difference plane on the JPEG
// block grid and summing frequency-weighted energies divided by visual masks
// derived from the reference alone. The per-block result is a DistanceMap;
// the global distance is its maximum.

#ifndef PJPEG_METRIC_H_
#define PJPEG_METRIC_H_

#include <array>
#include <filesystem>
#include <vector>

#include "pjpeg/color.h"
#include "pjpeg/dct.h"
#include "pjpeg/image.h"

namespace pjpeg {

enum OpponentChannel { kIntensity = 0, kRedGreen = 1, kBlueYellow = 2 };
enum class MaskBand { kLow, kHigh };

inline constexpr double kMaxMask = 6.0;

struct OpponentImage {
  int width = 0;
  int height = 0;
  std::array<Plane, 3> planes;  // indexed by OpponentChannel
};

OpponentImage OpponentTransform(const RgbImage& img);

// Per-8x8-block masking divisors, one per band and opponent channel.
struct MaskMap {
  int width_in_blocks = 0;
  int height_in_blocks = 0;
  std::vector<std::array<double, 3>> low;
  std::vector<std::array<double, 3>> high;

  double at(MaskBand band, int bx, int by, int channel) const {
    const auto& v = band == MaskBand::kLow ? low : high;
    return v[static_cast<size_t>(by) * width_in_blocks + bx][channel];
  }
};

MaskMap ComputeMasks(const OpponentImage& ref);

// The low-frequency mask governs coefficients with u + v <= 2.
MaskBand BandOf(int natural_index);

// Contrast sensitivity of an opponent channel at spatial frequency (fu, fv),
// in units of 8x8 DCT indices.
double FrequencyWeight(OpponentChannel channel, double fu, double fv);

struct DistanceMap {
  int width_in_blocks = 0;
  int height_in_blocks = 0;
  std::vector<double> values;

  double at(int bx, int by) const {
    return values[static_cast<size_t>(by) * width_in_blocks + bx];
  }
};

// Max-norm aggregation. Throws std::invalid_argument on an empty map.
double GlobalDistance(const DistanceMap& map);

// Reference-side state of the metric, reusable across many candidates.
class PerceptualMetric {
 public:
  explicit PerceptualMetric(const RgbImage& reference);

  // Throws std::invalid_argument if the candidate dimensions differ.
  DistanceMap Compare(const RgbImage& candidate) const;
  double Distance(const RgbImage& candidate) const {
    return GlobalDistance(Compare(candidate));
  }

  const RgbImage& reference() const { return reference_; }
  const MaskMap& masks() const { return masks_; }
  int width_in_blocks() const { return masks_.width_in_blocks; }
  int height_in_blocks() const { return masks_.height_in_blocks; }

  // Distance contributed by a unit error in each DCT coefficient of a
  // YCbCr component block: per-frequency sensitivity divided by the
  // applicable mask, evaluated at the reference colors of the block.
  // (bx, by) index the component's own block grid.
  std::array<double, kDctBlockSize> ComponentSensitivity(Sampling sampling,
                                                         int component,
                                                         int bx,
                                                         int by) const;

 private:
  // d(opponent) / d(sRGB code value), row-major 3x3 per pixel, with the
  // blue-yellow row already divided by the block's red+green factor.
  const double* Jacobian(int x, int y) const {
    return &jacobian_[(static_cast<size_t>(y) * reference_.width() + x) * 9];
  }
  std::array<double, 3> MeanOpponentGain(int component, int x0, int y0,
                                         int x1, int y1) const;

  RgbImage reference_;
  MaskMap masks_;
  std::vector<double> jacobian_;
};

// One-shot helper; builds the reference model every call.
DistanceMap ComputeDistanceMap(const RgbImage& ref, const RgbImage& candidate);

// 8-bit binary PGM, one pixel per block, linearly scaled so that max_value
// maps to 255 (max_value <= 0 selects the map maximum).
void WriteDistanceMapPgm(const DistanceMap& map,
                         const std::filesystem::path& path,
                         double max_value = 0.0);
// Mask values in [1, kMaxMask] scaled to [0, 255].
void WriteMaskPgm(const MaskMap& masks, MaskBand band, int channel,
                  const std::filesystem::path& path);

}  // namespace pjpeg

#endif  // PJPEG_METRIC_H_
