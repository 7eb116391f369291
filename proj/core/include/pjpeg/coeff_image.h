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

#ifndef PJPEG_COEFF_IMAGE_H_
#define PJPEG_COEFF_IMAGE_H_

#include <array>
#include <vector>

#include "pjpeg/color.h"
#include "pjpeg/image.h"
#include "pjpeg/quantize.h"

namespace pjpeg {

// Block grid of one component; dimensions are ceil(plane_dim / 8).
struct ComponentBlocks {
  int width_in_blocks = 0;
  int height_in_blocks = 0;
  std::vector<CoeffBlock> blocks;

  const CoeffBlock& at(int bx, int by) const {
    return blocks[static_cast<size_t>(by) * width_in_blocks + bx];
  }
  CoeffBlock& at(int bx, int by) {
    return blocks[static_cast<size_t>(by) * width_in_blocks + bx];
  }
  bool operator==(const ComponentBlocks& other) const = default;
};

struct CoeffImage {
  int width = 0;
  int height = 0;
  Sampling sampling = Sampling::kYuv444;
  QuantTable quant;
  std::array<ComponentBlocks, 3> components;

  bool operator==(const CoeffImage& other) const = default;
};

// Plane dimensions of component c for an image of the given size.
int ComponentWidth(int width, Sampling sampling, int component);
int ComponentHeight(int height, Sampling sampling, int component);

// Zero-filled CoeffImage with grids sized for the given geometry.
CoeffImage MakeCoeffImage(int width, int height, Sampling sampling,
                          const QuantTable& quant);

// Level shift, DCT and quantization of already color-converted planes.
// Partial edge blocks are padded by replicating the last row/column.
CoeffImage QuantizePlanes(const YuvPlanes& planes, const QuantTable& quant);

// Color conversion followed by QuantizePlanes.
CoeffImage ForwardTransform(const RgbImage& img, const QuantTable& quant,
                            Sampling sampling);

// Dequantize, inverse DCT, level shift, round and clamp to [0, 255].
YuvPlanes ReconstructPlanes(const CoeffImage& coeffs);

// ReconstructPlanes followed by YuvToRgb.
RgbImage Reconstruct(const CoeffImage& coeffs);

}  // namespace pjpeg

#endif  // PJPEG_COEFF_IMAGE_H_
