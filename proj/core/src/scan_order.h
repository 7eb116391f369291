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

#ifndef PJPEG_SRC_SCAN_ORDER_H_
#define PJPEG_SRC_SCAN_ORDER_H_

#include <array>

#include "pjpeg/color.h"

namespace pjpeg {

// JFIF component ids and segment layout shared by writer, reader and checker.
inline constexpr std::array<uint8_t, 3> kComponentIds = {1, 2, 3};

// Visits the blocks of a single interleaved scan in MCU order. In 4:2:0 the
// luma grid is rounded up to whole MCUs; blocks outside the component grid
// are reported with padding = true.
//
// fn(component, bx, by, padding)
template <typename Fn>
void ForEachScanBlock(Sampling sampling, const std::array<int, 3>& grid_w,
                      const std::array<int, 3>& grid_h, Fn&& fn) {
  if (sampling == Sampling::kYuv444) {
    for (int by = 0; by < grid_h[0]; ++by) {
      for (int bx = 0; bx < grid_w[0]; ++bx) {
        for (int c = 0; c < 3; ++c) fn(c, bx, by, false);
      }
    }
    return;
  }
  const int mcus_x = grid_w[1];
  const int mcus_y = grid_h[1];
  for (int my = 0; my < mcus_y; ++my) {
    for (int mx = 0; mx < mcus_x; ++mx) {
      for (int j = 0; j < 2; ++j) {
        for (int i = 0; i < 2; ++i) {
          const int bx = 2 * mx + i;
          const int by = 2 * my + j;
          fn(0, bx, by, bx >= grid_w[0] || by >= grid_h[0]);
        }
      }
      fn(1, mx, my, false);
      fn(2, mx, my, false);
    }
  }
}

// Number of bits needed for |v| (JPEG magnitude category).
inline int MagnitudeCategory(int32_t v) {
  uint32_t a = static_cast<uint32_t>(v < 0 ? -v : v);
  int n = 0;
  while (a) {
    ++n;
    a >>= 1;
  }
  return n;
}

}  // namespace pjpeg

#endif  // PJPEG_SRC_SCAN_ORDER_H_
