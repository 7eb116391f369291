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

#include "pjpeg/color.h"

#include <algorithm>
#include <cmath>

namespace pjpeg {

namespace {

double Clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

uint8_t RoundToByte(double v) {
  return static_cast<uint8_t>(std::lround(Clamp255(v)));
}

// Averages the up to 2x2 full-resolution samples covered by (cx, cy).
Plane BoxDownsample(const Plane& full) {
  Plane half((full.width + 1) / 2, (full.height + 1) / 2);
  for (int cy = 0; cy < half.height; ++cy) {
    for (int cx = 0; cx < half.width; ++cx) {
      double sum = 0.0;
      int n = 0;
      for (int y = 2 * cy; y < std::min(2 * cy + 2, full.height); ++y) {
        for (int x = 2 * cx; x < std::min(2 * cx + 2, full.width); ++x) {
          sum += full.at(x, y);
          ++n;
        }
      }
      half.at(cx, cy) = sum / n;
    }
  }
  return half;
}

}  // namespace

const char* SamplingName(Sampling sampling) {
  return sampling == Sampling::kYuv420 ? "yuv420" : "yuv444";
}

YuvPlanes RgbToYuv(const RgbImage& img, Sampling sampling) {
  const int w = img.width();
  const int h = img.height();
  YuvPlanes out;
  out.width = w;
  out.height = h;
  out.sampling = sampling;
  out.y = Plane(w, h);
  Plane cb(w, h);
  Plane cr(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double r = img.at(x, y, 0);
      const double g = img.at(x, y, 1);
      const double b = img.at(x, y, 2);
      out.y.at(x, y) = Clamp255(0.299 * r + 0.587 * g + 0.114 * b);
      cb.at(x, y) =
          Clamp255(-0.168735892 * r - 0.331264108 * g + 0.5 * b + 128.0);
      cr.at(x, y) =
          Clamp255(0.5 * r - 0.418687589 * g - 0.081312411 * b + 128.0);
    }
  }
  if (sampling == Sampling::kYuv420) {
    out.cb = BoxDownsample(cb);
    out.cr = BoxDownsample(cr);
  } else {
    out.cb = std::move(cb);
    out.cr = std::move(cr);
  }
  return out;
}

RgbImage YuvToRgb(const YuvPlanes& planes) {
  RgbImage img(planes.width, planes.height);
  const int shift = planes.sampling == Sampling::kYuv420 ? 1 : 0;
  for (int y = 0; y < planes.height; ++y) {
    for (int x = 0; x < planes.width; ++x) {
      const double luma = planes.y.at(x, y);
      const double cb = planes.cb.at(x >> shift, y >> shift) - 128.0;
      const double cr = planes.cr.at(x >> shift, y >> shift) - 128.0;
      img.SetPixel(x, y, RoundToByte(luma + 1.402 * cr),
                   RoundToByte(luma - 0.344136286 * cb - 0.714136286 * cr),
                   RoundToByte(luma + 1.772 * cb));
    }
  }
  return img;
}

}  // namespace pjpeg
