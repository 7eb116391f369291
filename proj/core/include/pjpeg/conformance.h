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

#ifndef PJPEG_CONFORMANCE_H_
#define PJPEG_CONFORMANCE_H_

#include <cstdint>
#include <span>
#include <string>

namespace pjpeg {

struct ConformanceReport {
  bool ok = true;
  // First violation found, empty when ok.
  std::string violation;
  // Byte offset of the offending marker or segment.
  size_t offset = 0;
};

// Structural check of a sequential baseline JFIF stream: marker order,
// segment lengths, DQT/DHT/SOF0/SOS field ranges, Huffman table validity
// and a full decode of the entropy-coded scan. Never throws.
ConformanceReport CheckConformance(std::span<const uint8_t> bytes);

}  // namespace pjpeg

#endif  // PJPEG_CONFORMANCE_H_
