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

#include "pjpeg/dct.h"

#include <cmath>
#include <numbers>

namespace pjpeg {

namespace {

// kBasis[u][x] = c(u) / 2 * cos((2x + 1) u pi / 16), orthonormal rows.
struct Basis {
  double m[8][8];
  Basis() {
    for (int u = 0; u < 8; ++u) {
      const double c = u == 0 ? std::sqrt(0.125) : 0.5;
      for (int x = 0; x < 8; ++x) {
        m[u][x] = c * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
      }
    }
  }
};

const Basis& GetBasis() {
  static const Basis basis;
  return basis;
}

}  // namespace

DctBlock ForwardDct(const DctBlock& samples) {
  const auto& m = GetBasis().m;
  double tmp[64];
  // Rows.
  for (int y = 0; y < 8; ++y) {
    for (int u = 0; u < 8; ++u) {
      double sum = 0.0;
      for (int x = 0; x < 8; ++x) sum += m[u][x] * samples[y * 8 + x];
      tmp[y * 8 + u] = sum;
    }
  }
  // Columns.
  DctBlock out;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      double sum = 0.0;
      for (int y = 0; y < 8; ++y) sum += m[v][y] * tmp[y * 8 + u];
      out[v * 8 + u] = sum;
    }
  }
  return out;
}

DctBlock InverseDct(const DctBlock& coeffs) {
  const auto& m = GetBasis().m;
  double tmp[64];
  for (int v = 0; v < 8; ++v) {
    for (int x = 0; x < 8; ++x) {
      double sum = 0.0;
      for (int u = 0; u < 8; ++u) sum += m[u][x] * coeffs[v * 8 + u];
      tmp[v * 8 + x] = sum;
    }
  }
  DctBlock out;
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      double sum = 0.0;
      for (int v = 0; v < 8; ++v) sum += m[v][y] * tmp[v * 8 + x];
      out[y * 8 + x] = sum;
    }
  }
  return out;
}

}  // namespace pjpeg
