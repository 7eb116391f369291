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

#include "pjpeg/quality.h"

#include <array>
#include <stdexcept>
#include <utility>

namespace pjpeg {

namespace {

// (quality, distance) anchors, quality ascending. Values are rounded corpus
// means of this metric for QualityTable(quality) encodes.
constexpr std::array<std::pair<int, double>, 10> kAnchors = {{
    {1, 18.0},
    {10, 6.5},
    {20, 3.6},
    {30, 2.75},
    {40, 2.3},
    {50, 2.0},
    {70, 1.6},
    {80, 1.3},
    {90, 0.9},
    {100, 0.2},
}};

}  // namespace

double QualityToDistance(int quality) {
  if (quality < 1 || quality > 100) {
    throw std::invalid_argument("quality must be in [1, 100]");
  }
  for (size_t i = 1; i < kAnchors.size(); ++i) {
    const auto [q1, d1] = kAnchors[i];
    if (quality <= q1) {
      const auto [q0, d0] = kAnchors[i - 1];
      const double t = static_cast<double>(quality - q0) / (q1 - q0);
      return d0 + t * (d1 - d0);
    }
  }
  return kAnchors.back().second;
}

}  // namespace pjpeg
