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

#ifndef PJPEG_IMAGE_IO_H_
#define PJPEG_IMAGE_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pjpeg/image.h"

namespace pjpeg {

class ImageIoError : public std::runtime_error {
 public:
  enum class Kind { kIo, kUnsupportedFormat, kUnsupportedDepth, kMalformed };

  ImageIoError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes);

// Binary PPM (P6, maxval 255).
RgbImage DecodePpm(std::span<const uint8_t> bytes);
std::vector<uint8_t> EncodePpm(const RgbImage& img);

// 8-bit PNG. Gray and palette images are expanded to RGB; alpha is
// composited over white. 16-bit channels are rejected.
RgbImage DecodePng(std::span<const uint8_t> bytes);
std::vector<uint8_t> EncodePng(const RgbImage& img);

// Dispatches on the file signature. JPEG input is limited to streams this
// library writes.
RgbImage LoadImage(const std::filesystem::path& path);

}  // namespace pjpeg

#endif  // PJPEG_IMAGE_IO_H_
