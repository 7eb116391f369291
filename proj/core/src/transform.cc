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

#include "pjpeg/coeff_image.h"

#include <algorithm>
#include <cmath>

#include "pjpeg/dct.h"

namespace pjpeg {

namespace {

int BlocksFor(int samples) { return (samples + 7) / 8; }

const Plane& PlaneOf(const YuvPlanes& planes, int c) {
  return c == 0 ? planes.y : c == 1 ? planes.cb : planes.cr;
}

Plane& PlaneOf(YuvPlanes& planes, int c) {
  return c == 0 ? planes.y : c == 1 ? planes.cb : planes.cr;
}

}  // namespace

int ComponentWidth(int width, Sampling sampling, int component) {
  return component > 0 && sampling == Sampling::kYuv420 ? (width + 1) / 2
                                                         : width;
}

int ComponentHeight(int height, Sampling sampling, int component) {
  return component > 0 && sampling == Sampling::kYuv420 ? (height + 1) / 2
                                                         : height;
}

CoeffImage MakeCoeffImage(int width, int height, Sampling sampling,
                          const QuantTable& quant) {
  CoeffImage out;
  out.width = width;
  out.height = height;
  out.sampling = sampling;
  out.quant = quant;
  for (int c = 0; c < 3; ++c) {
    ComponentBlocks& comp = out.components[c];
    comp.width_in_blocks = BlocksFor(ComponentWidth(width, sampling, c));
    comp.height_in_blocks = BlocksFor(ComponentHeight(height, sampling, c));
    comp.blocks.assign(
        static_cast<size_t>(comp.width_in_blocks) * comp.height_in_blocks,
        CoeffBlock{});
  }
  return out;
}

CoeffImage QuantizePlanes(const YuvPlanes& planes, const QuantTable& quant) {
  CoeffImage out =
      MakeCoeffImage(planes.width, planes.height, planes.sampling, quant);
  for (int c = 0; c < 3; ++c) {
    const Plane& plane = PlaneOf(planes, c);
    ComponentBlocks& comp = out.components[c];
    for (int by = 0; by < comp.height_in_blocks; ++by) {
      for (int bx = 0; bx < comp.width_in_blocks; ++bx) {
        DctBlock samples;
        for (int iy = 0; iy < 8; ++iy) {
          const int y = std::min(by * 8 + iy, plane.height - 1);
          for (int ix = 0; ix < 8; ++ix) {
            const int x = std::min(bx * 8 + ix, plane.width - 1);
            samples[iy * 8 + ix] = plane.at(x, y) - 128.0;
          }
        }
        comp.at(bx, by) = QuantizeBlock(ForwardDct(samples), quant.values[c]);
      }
    }
  }
  return out;
}

CoeffImage ForwardTransform(const RgbImage& img, const QuantTable& quant,
                            Sampling sampling) {
  return QuantizePlanes(RgbToYuv(img, sampling), quant);
}

YuvPlanes ReconstructPlanes(const CoeffImage& coeffs) {
  YuvPlanes planes;
  planes.width = coeffs.width;
  planes.height = coeffs.height;
  planes.sampling = coeffs.sampling;
  for (int c = 0; c < 3; ++c) {
    const ComponentBlocks& comp = coeffs.components[c];
    Plane& plane = PlaneOf(planes, c);
    plane = Plane(ComponentWidth(coeffs.width, coeffs.sampling, c),
                  ComponentHeight(coeffs.height, coeffs.sampling, c));
    for (int by = 0; by < comp.height_in_blocks; ++by) {
      for (int bx = 0; bx < comp.width_in_blocks; ++bx) {
        const DctBlock samples =
            InverseDct(DequantizeBlock(comp.at(bx, by), coeffs.quant.values[c]));
        const int ymax = std::min(8, plane.height - by * 8);
        const int xmax = std::min(8, plane.width - bx * 8);
        for (int iy = 0; iy < ymax; ++iy) {
          for (int ix = 0; ix < xmax; ++ix) {
            plane.at(bx * 8 + ix, by * 8 + iy) =
                std::clamp(std::round(samples[iy * 8 + ix] + 128.0), 0.0, 255.0);
          }
        }
      }
    }
  }
  return planes;
}

RgbImage Reconstruct(const CoeffImage& coeffs) {
  return YuvToRgb(ReconstructPlanes(coeffs));
}

}  // namespace pjpeg
