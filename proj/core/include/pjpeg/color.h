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

#ifndef PJPEG_COLOR_H_
#define PJPEG_COLOR_H_

#include "pjpeg/image.h"

namespace pjpeg {

enum class Sampling { kYuv444, kYuv420 };

const char* SamplingName(Sampling sampling);

// Full-range JFIF YCbCr. In kYuv420 mode the chroma planes are
// ceil(width / 2) x ceil(height / 2).
struct YuvPlanes {
  int width = 0;
  int height = 0;
  Sampling sampling = Sampling::kYuv444;
  Plane y;
  Plane cb;
  Plane cr;
};

// BT.601 forward transform, results clamped to [0, 255]. Chroma is 2x2
// box-averaged in kYuv420 mode (edge boxes average the pixels they cover).
YuvPlanes RgbToYuv(const RgbImage& img, Sampling sampling);

// Inverse transform with rounding and clamping. kYuv420 chroma is upsampled
// by nearest-neighbour replication.
RgbImage YuvToRgb(const YuvPlanes& planes);

}  // namespace pjpeg

#endif  // PJPEG_COLOR_H_
