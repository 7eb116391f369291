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

#include "huffman.h"

#include <algorithm>
#include <set>

namespace pjpeg {

HuffmanSpec BuildOptimalHuffman(const SymbolHistogram& histogram) {
  constexpr int kSymbols = 257;  // 256 is the reserved pseudo-symbol
  std::array<int64_t, kSymbols> freq{};
  for (int i = 0; i < 256; ++i) freq[i] = histogram[i];
  freq[256] = 1;
  std::array<int, kSymbols> codesize{};
  std::array<int, kSymbols> others;
  others.fill(-1);

  for (;;) {
    // c1: least frequent nonzero symbol, ties to the larger index; c2: next.
    int c1 = -1;
    int64_t v = INT64_MAX;
    for (int i = 0; i < kSymbols; ++i) {
      if (freq[i] && freq[i] <= v) {
        v = freq[i];
        c1 = i;
      }
    }
    int c2 = -1;
    v = INT64_MAX;
    for (int i = 0; i < kSymbols; ++i) {
      if (freq[i] && freq[i] <= v && i != c1) {
        v = freq[i];
        c2 = i;
      }
    }
    if (c2 < 0) break;

    freq[c1] += freq[c2];
    freq[c2] = 0;
    ++codesize[c1];
    while (others[c1] >= 0) {
      c1 = others[c1];
      ++codesize[c1];
    }
    others[c1] = c2;
    ++codesize[c2];
    while (others[c2] >= 0) {
      c2 = others[c2];
      ++codesize[c2];
    }
  }

  // Count codes of each length; the tree can be deeper than 32 only for
  // astronomically skewed inputs, so 64 slots are plenty.
  std::array<int, 64> bits{};
  for (int i = 0; i < kSymbols; ++i) {
    if (codesize[i]) ++bits[std::min(codesize[i], 63)];
  }

  // Annex K.3: move codes longer than 16 bits up the tree.
  for (int i = 63; i > kMaxHuffmanCodeLength; --i) {
    while (bits[i] > 0) {
      int j = i - 2;
      while (bits[j] == 0) --j;
      bits[i] -= 2;
      bits[i - 1] += 1;
      bits[j + 1] += 2;
      bits[j] -= 1;
    }
  }
  // Drop the pseudo-symbol, which owns one of the longest codes.
  int longest = kMaxHuffmanCodeLength;
  while (bits[longest] == 0) --longest;
  bits[longest] -= 1;

  HuffmanSpec spec;
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) {
    spec.counts[l] = static_cast<uint8_t>(bits[l]);
  }
  // Symbols sorted by code length, then by symbol value.
  for (int l = 1; l < 64; ++l) {
    for (int s = 0; s < 256; ++s) {
      if (codesize[s] == l) spec.symbols.push_back(static_cast<uint8_t>(s));
    }
  }
  return spec;
}

bool ValidateHuffmanSpec(const HuffmanSpec& spec, std::string* why) {
  size_t total = 0;
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) total += spec.counts[l];
  if (total != spec.symbols.size()) {
    *why = "code counts do not match symbol list";
    return false;
  }
  if (total == 0 || total > 256) {
    *why = "symbol count out of range";
    return false;
  }
  // Codes left at each length; the last code of length 16 must stay free
  // when the code is complete (no all-ones codeword).
  int64_t available = 1;
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) {
    available = available * 2 - spec.counts[l];
    if (available < 0) {
      *why = "code lengths oversubscribe the code space";
      return false;
    }
  }
  if (available == 0) {
    *why = "all-ones codeword in use";
    return false;
  }
  std::set<uint8_t> seen(spec.symbols.begin(), spec.symbols.end());
  if (seen.size() != spec.symbols.size()) {
    *why = "duplicate symbol";
    return false;
  }
  return true;
}

HuffmanEncodeTable MakeEncodeTable(const HuffmanSpec& spec) {
  HuffmanEncodeTable table;
  uint32_t code = 0;
  size_t k = 0;
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) {
    for (int i = 0; i < spec.counts[l]; ++i, ++k) {
      table.code[spec.symbols[k]] = static_cast<uint16_t>(code);
      table.length[spec.symbols[k]] = static_cast<uint8_t>(l);
      ++code;
    }
    code <<= 1;
  }
  return table;
}

HuffmanDecodeTable MakeDecodeTable(const HuffmanSpec& spec) {
  HuffmanDecodeTable table;
  table.symbols = spec.symbols;
  table.defined = true;
  int32_t code = 0;
  int32_t k = 0;
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) {
    if (spec.counts[l] == 0) {
      table.maxcode[l] = -1;
    } else {
      table.valptr[l] = k;
      table.mincode[l] = code;
      code += spec.counts[l];
      k += spec.counts[l];
      table.maxcode[l] = code - 1;
    }
    code <<= 1;
  }
  table.maxcode[kMaxHuffmanCodeLength + 1] = INT32_MAX;
  return table;
}

}  // namespace pjpeg
