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

#ifndef PJPEG_QUANTIZE_H_
#define PJPEG_QUANTIZE_H_

#include <array>
#include <cstdint>

#include "pjpeg/dct.h"

namespace pjpeg {

// Quantized DCT coefficients of one block in natural order; index 0 is DC.
using CoeffBlock = std::array<int32_t, kDctBlockSize>;

// Baseline limits: AC magnitudes must fit Huffman category 10, DC values
// must keep every DC difference within category 11.
inline constexpr int32_t kMaxAcMagnitude = 1023;
inline constexpr int32_t kMinDcValue = -1024;
inline constexpr int32_t kMaxDcValue = 1023;

// kZigzagToNatural[i] is the natural index of the i-th zigzag coefficient.
extern const std::array<int, kDctBlockSize> kZigzagToNatural;
extern const std::array<int, kDctBlockSize> kNaturalToZigzag;

// Diagonal index u + v of a natural-order coefficient (0 for DC, 14 max).
inline int ZigzagRadius(int natural_index) {
  return natural_index / 8 + natural_index % 8;
}

// Component quantization tables in natural order: [0] Y, [1] Cb, [2] Cr.
struct QuantTable {
  std::array<std::array<int, kDctBlockSize>, 3> values{};

  // True when every one of the 192 entries lies in [1, 255].
  bool IsValid() const;
  bool operator==(const QuantTable& other) const = default;
};

// round-half-away-from-zero(coeff / q) per coefficient.
CoeffBlock QuantizeBlock(const DctBlock& coeffs,
                         const std::array<int, kDctBlockSize>& table);

DctBlock DequantizeBlock(const CoeffBlock& block,
                         const std::array<int, kDctBlockSize>& table);

}  // namespace pjpeg

#endif  // PJPEG_QUANTIZE_H_
