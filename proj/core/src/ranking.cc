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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pjpeg/optimizer.h"

namespace pjpeg {

ZeroPlan ZeroPlan::Empty(const CoeffImage& coeffs) {
  ZeroPlan plan;
  for (int c = 0; c < 3; ++c) {
    const ComponentBlocks& comp = coeffs.components[c];
    plan.components[c].width_in_blocks = comp.width_in_blocks;
    plan.components[c].height_in_blocks = comp.height_in_blocks;
    plan.components[c].counts.assign(comp.blocks.size(), 0);
  }
  return plan;
}

ImportanceOrder RankCoefficients(const CoeffImage& coeffs,
                                 const PerceptualMetric& metric) {
  ImportanceOrder order;
  for (int c = 0; c < 3; ++c) {
    const ComponentBlocks& comp = coeffs.components[c];
    const auto& q = coeffs.quant.values[c];
    order.components[c].resize(comp.blocks.size());
    for (int by = 0; by < comp.height_in_blocks; ++by) {
      for (int bx = 0; bx < comp.width_in_blocks; ++bx) {
        const CoeffBlock& block = comp.at(bx, by);
        const auto sensitivity =
            metric.ComponentSensitivity(coeffs.sampling, c, bx, by);
        std::array<float, kDctBlockSize> score{};
        for (int k = 1; k < kDctBlockSize; ++k) {
          score[k] = static_cast<float>(std::abs(block[k]) *
                                        static_cast<double>(q[k]) *
                                        sensitivity[k]);
        }
        BlockOrder& out =
            order.components[c][static_cast<size_t>(by) * comp.width_in_blocks + bx];
        std::array<int, kDctBlockSize - 1> idx;
        std::iota(idx.begin(), idx.end(), 1);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
          if (score[a] != score[b]) return score[a] < score[b];
          return kNaturalToZigzag[a] > kNaturalToZigzag[b];
        });
        for (int i = 0; i < kDctBlockSize - 1; ++i) {
          out.indices[i] = static_cast<uint8_t>(idx[i]);
          out.scores[i] = score[idx[i]];
        }
      }
    }
  }
  return order;
}

CoeffImage ApplyZeroPlan(const CoeffImage& coeffs, const ImportanceOrder& order,
                         const ZeroPlan& plan) {
  CoeffImage out = coeffs;
  for (int c = 0; c < 3; ++c) {
    ComponentBlocks& comp = out.components[c];
    const ZeroPlan::Grid& grid = plan.components[c];
    if (grid.width_in_blocks != comp.width_in_blocks ||
        grid.height_in_blocks != comp.height_in_blocks ||
        grid.counts.size() != comp.blocks.size() ||
        order.components[c].size() != comp.blocks.size()) {
      throw std::invalid_argument("zero plan shape does not match block grid");
    }
    for (size_t b = 0; b < comp.blocks.size(); ++b) {
      const int count = std::min<int>(grid.counts[b], kDctBlockSize - 1);
      for (int i = 0; i < count; ++i) {
        comp.blocks[b][order.components[c][b].indices[i]] = 0;
      }
    }
  }
  return out;
}

}  // namespace pjpeg
