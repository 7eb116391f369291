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

#ifndef PJPEG_QUALITY_H_
#define PJPEG_QUALITY_H_

namespace pjpeg {

// Maps a 1..100 quality knob onto a target distance of this library's
// metric. The mapping is a fixed, monotonically decreasing, piecewise-linear
// lookup through ten anchor points; it is a calibration convenience only.
// Throws std::invalid_argument outside [1, 100].
double QualityToDistance(int quality);

}  // namespace pjpeg

#endif  // PJPEG_QUALITY_H_
