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

#ifndef PJPEG_IMAGE_H_
#define PJPEG_IMAGE_H_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pjpeg {

// 8-bit sRGB raster, row-major with interleaved R, G, B samples.
class RgbImage {
 public:
  RgbImage() = default;
  // Black image. Throws std::invalid_argument unless width, height >= 1.
  RgbImage(int width, int height);
  // Takes ownership of samples; size must be width * height * 3.
  RgbImage(int width, int height, std::vector<uint8_t> samples);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t pixel_count() const { return static_cast<size_t>(width_) * height_; }

  const std::vector<uint8_t>& samples() const { return samples_; }
  std::vector<uint8_t>& mutable_samples() { return samples_; }

  uint8_t at(int x, int y, int channel) const {
    return samples_[(static_cast<size_t>(y) * width_ + x) * 3 + channel];
  }
  uint8_t& at(int x, int y, int channel) {
    return samples_[(static_cast<size_t>(y) * width_ + x) * 3 + channel];
  }
  void SetPixel(int x, int y, uint8_t r, uint8_t g, uint8_t b) {
    uint8_t* p = &samples_[(static_cast<size_t>(y) * width_ + x) * 3];
    p[0] = r;
    p[1] = g;
    p[2] = b;
  }

  bool operator==(const RgbImage& other) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> samples_;
};

// Single real-valued sample plane.
struct Plane {
  Plane() = default;
  Plane(int w, int h, double fill = 0.0)
      : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

  double at(int x, int y) const {
    return data[static_cast<size_t>(y) * width + x];
  }
  double& at(int x, int y) { return data[static_cast<size_t>(y) * width + x]; }

  int width = 0;
  int height = 0;
  std::vector<double> data;
};

}  // namespace pjpeg

#endif  // PJPEG_IMAGE_H_
