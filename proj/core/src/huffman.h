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

#ifndef PJPEG_SRC_HUFFMAN_H_
#define PJPEG_SRC_HUFFMAN_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pjpeg {

inline constexpr int kMaxHuffmanCodeLength = 16;

// Table as stored in a DHT segment.
struct HuffmanSpec {
  // counts[l] = number of codes of length l, l in [1, 16]; counts[0] unused.
  std::array<uint8_t, kMaxHuffmanCodeLength + 1> counts{};
  // Symbols in order of increasing code length.
  std::vector<uint8_t> symbols;
};

using SymbolHistogram = std::array<uint32_t, 256>;

// Length-limited optimal code for the histogram (JPEG Annex K.2 procedure).
// A reserved pseudo-symbol keeps the all-ones codeword unused. Symbols with
// zero frequency get no code.
HuffmanSpec BuildOptimalHuffman(const SymbolHistogram& histogram);

// Checks code counts against the symbol list, the Kraft inequality with the
// all-ones codeword excluded, and duplicate symbols. Writes the reason to
// *why on failure.
bool ValidateHuffmanSpec(const HuffmanSpec& spec, std::string* why);

struct HuffmanEncodeTable {
  std::array<uint16_t, 256> code{};
  std::array<uint8_t, 256> length{};  // 0 for symbols without a code
};

HuffmanEncodeTable MakeEncodeTable(const HuffmanSpec& spec);

// Canonical decoding tables (JPEG F.2.2.3 MINCODE/MAXCODE/VALPTR).
struct HuffmanDecodeTable {
  std::array<int32_t, kMaxHuffmanCodeLength + 2> maxcode{};
  std::array<int32_t, kMaxHuffmanCodeLength + 1> mincode{};
  std::array<int32_t, kMaxHuffmanCodeLength + 1> valptr{};
  std::vector<uint8_t> symbols;
  bool defined = false;
};

HuffmanDecodeTable MakeDecodeTable(const HuffmanSpec& spec);

}  // namespace pjpeg

#endif  // PJPEG_SRC_HUFFMAN_H_
