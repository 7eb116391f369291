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

#ifndef PJPEG_JPEG_H_
#define PJPEG_JPEG_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pjpeg/coeff_image.h"
#include "pjpeg/image.h"

namespace pjpeg {

// A complete JFIF stream, SOI through EOI.
struct EncodedJpeg {
  std::vector<uint8_t> bytes;

  size_t size() const { return bytes.size(); }
  bool operator==(const EncodedJpeg& other) const = default;
};

class EncodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DecodeError : public std::runtime_error {
 public:
  enum class Kind {
    kMarker,     // missing SOI, unexpected or malformed marker segment
    kHuffman,    // no code matches the bit pattern, bad run/size symbol
    kTruncated,  // stream ends before a segment, the scan, or EOI
    kUnsupported,
  };

  DecodeError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Sequential baseline JFIF writer with per-image optimized Huffman tables.
// Throws EncodeError when a coefficient is outside the baseline range or the
// quantization table is invalid.
EncodedJpeg EntropyEncode(const CoeffImage& coeffs);

struct DecodedJpeg {
  CoeffImage coeffs;
  RgbImage pixels;
};

// Decodes streams written by EntropyEncode (single interleaved baseline scan,
// 4:4:4 or 4:2:0). Throws DecodeError.
DecodedJpeg Decode(std::span<const uint8_t> bytes);

// ForwardTransform followed by EntropyEncode.
EncodedJpeg EncodeImage(const RgbImage& img, const QuantTable& quant,
                        Sampling sampling);

}  // namespace pjpeg

#endif  // PJPEG_JPEG_H_
