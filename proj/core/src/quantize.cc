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

#include "pjpeg/quantize.h"

#include <cmath>

namespace pjpeg {

const std::array<int, kDctBlockSize> kZigzagToNatural = {
    0,  1,  8,  16, 9,  2,  3,  10, 17, 24, 32, 25, 18, 11, 4,  5,
    12, 19, 26, 33, 40, 48, 41, 34, 27, 20, 13, 6,  7,  14, 21, 28,
    35, 42, 49, 56, 57, 50, 43, 36, 29, 22, 15, 23, 30, 37, 44, 51,
    58, 59, 52, 45, 38, 31, 39, 46, 53, 60, 61, 54, 47, 55, 62, 63,
};

const std::array<int, kDctBlockSize> kNaturalToZigzag = [] {
  std::array<int, kDctBlockSize> inverse{};
  for (int i = 0; i < kDctBlockSize; ++i) inverse[kZigzagToNatural[i]] = i;
  return inverse;
}();

bool QuantTable::IsValid() const {
  for (const auto& table : values) {
    for (int v : table) {
      if (v < 1 || v > 255) return false;
    }
  }
  return true;
}

CoeffBlock QuantizeBlock(const DctBlock& coeffs,
                         const std::array<int, kDctBlockSize>& table) {
  CoeffBlock out;
  for (int k = 0; k < kDctBlockSize; ++k) {
    // std::round breaks ties away from zero.
    out[k] = static_cast<int32_t>(std::round(coeffs[k] / table[k]));
  }
  return out;
}

DctBlock DequantizeBlock(const CoeffBlock& block,
                         const std::array<int, kDctBlockSize>& table) {
  DctBlock out;
  for (int k = 0; k < kDctBlockSize; ++k) {
    out[k] = static_cast<double>(block[k]) * table[k];
  }
  return out;
}

}  // namespace pjpeg
