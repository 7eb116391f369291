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

#ifndef PJPEG_DCT_H_
#define PJPEG_DCT_H_

#include <array>

namespace pjpeg {

inline constexpr int kDctBlockSize = 64;

// 8x8 block in natural (row-major) order; rows are vertical frequency/position.
using DctBlock = std::array<double, kDctBlockSize>;

// Orthonormal 2-D DCT-II of level-shifted samples. A constant block of value
// v yields DC = 8 * v.
DctBlock ForwardDct(const DctBlock& samples);

// Exact inverse of ForwardDct. No level shift or clamping is applied.
DctBlock InverseDct(const DctBlock& coeffs);

}  // namespace pjpeg

#endif  // PJPEG_DCT_H_
