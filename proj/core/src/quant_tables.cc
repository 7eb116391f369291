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

#include "pjpeg/quant_tables.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pjpeg {

const std::array<int, kDctBlockSize> kAnnexKLuma = {
    16, 11, 10, 16, 24,  40,  51,  61,   //
    12, 12, 14, 19, 26,  58,  60,  55,   //
    14, 13, 16, 24, 40,  57,  69,  56,   //
    14, 17, 22, 29, 51,  87,  80,  62,   //
    18, 22, 37, 56, 68,  109, 103, 77,   //
    24, 35, 55, 64, 81,  104, 113, 92,   //
    49, 64, 78, 87, 103, 121, 120, 101,  //
    72, 92, 95, 98, 112, 100, 103, 99,
};

const std::array<int, kDctBlockSize> kAnnexKChroma = {
    17, 18, 24, 47, 99, 99, 99, 99,  //
    18, 21, 26, 66, 99, 99, 99, 99,  //
    24, 26, 56, 99, 99, 99, 99, 99,  //
    47, 66, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,  //
    99, 99, 99, 99, 99, 99, 99, 99,
};

QuantTable ScaledAnnexKTable(double factor) {
  QuantTable t;
  for (int k = 0; k < kDctBlockSize; ++k) {
    const auto scale = [factor](int base) {
      return static_cast<int>(
          std::clamp(std::lround(base * factor), 1L, 255L));
    };
    t.values[0][k] = scale(kAnnexKLuma[k]);
    t.values[1][k] = scale(kAnnexKChroma[k]);
    t.values[2][k] = t.values[1][k];
  }
  return t;
}

QuantTable QualityTable(int quality) {
  if (quality < 1 || quality > 100) {
    throw std::invalid_argument("quality must be in [1, 100]");
  }
  const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
  QuantTable t;
  for (int k = 0; k < kDctBlockSize; ++k) {
    const auto scaled = [scale](int base) {
      return std::clamp((base * scale + 50) / 100, 1, 255);
    };
    t.values[0][k] = scaled(kAnnexKLuma[k]);
    t.values[1][k] = scaled(kAnnexKChroma[k]);
    t.values[2][k] = t.values[1][k];
  }
  return t;
}

QuantTableSet BuildTableSet(int n) {
  if (n < 2) throw std::invalid_argument("table set needs at least 2 tables");
  QuantTableSet set;
  const double ratio = kCoarsestTableFactor / kFinestTableFactor;
  for (int i = 0; i < n; ++i) {
    const double f = kFinestTableFactor * std::pow(ratio, i / (n - 1.0));
    set.factors.push_back(f);
    set.tables.push_back(ScaledAnnexKTable(f));
  }
  return set;
}

}  // namespace pjpeg
