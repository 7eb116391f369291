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

#include "pjpeg/image.h"

#include <stdexcept>
#include <utility>

namespace pjpeg {

RgbImage::RgbImage(int width, int height)
    : RgbImage(width, height,
               std::vector<uint8_t>(
                   width > 0 && height > 0
                       ? static_cast<size_t>(width) * height * 3
                       : 0)) {}

RgbImage::RgbImage(int width, int height, std::vector<uint8_t> samples)
    : width_(width), height_(height), samples_(std::move(samples)) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("image dimensions must be positive");
  }
  if (samples_.size() != static_cast<size_t>(width) * height * 3) {
    throw std::invalid_argument("sample count does not match dimensions");
  }
}

}  // namespace pjpeg
