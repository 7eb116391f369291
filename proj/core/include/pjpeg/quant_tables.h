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

#ifndef PJPEG_QUANT_TABLES_H_
#define PJPEG_QUANT_TABLES_H_

#include <array>
#include <vector>

#include "pjpeg/quantize.h"

namespace pjpeg {

// Example tables from Annex K of the JPEG standard, natural order.
extern const std::array<int, kDctBlockSize> kAnnexKLuma;
extern const std::array<int, kDctBlockSize> kAnnexKChroma;

// Annex-K tables times factor, rounded and clamped to [1, 255]. The chroma
// table is used for both Cb and Cr. Factor 0 gives the all-ones table.
QuantTable ScaledAnnexKTable(double factor);

// libjpeg's quality scaling of the Annex-K tables, quality in [1, 100].
QuantTable QualityTable(int quality);

// Ordered finest to coarsest; entries are elementwise non-decreasing.
struct QuantTableSet {
  std::vector<QuantTable> tables;
  std::vector<double> factors;

  size_t size() const { return tables.size(); }
  const QuantTable& operator[](size_t i) const { return tables[i]; }
};

inline constexpr double kFinestTableFactor = 0.02;
inline constexpr double kCoarsestTableFactor = 2.0;

// n tables at geometrically spaced factors from kFinestTableFactor to
// kCoarsestTableFactor. Throws std::invalid_argument for n < 2.
QuantTableSet BuildTableSet(int n);

}  // namespace pjpeg

#endif  // PJPEG_QUANT_TABLES_H_
