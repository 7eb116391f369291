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

#include "pjpeg/conformance.h"

#include <array>
#include <cstring>
#include <string>

#include "huffman.h"
#include "pjpeg/jpeg.h"

namespace pjpeg {

namespace {

// Internal early exit carrying the first violation.
struct Violation {
  std::string what;
  size_t offset;
};

class Checker {
 public:
  explicit Checker(std::span<const uint8_t> bytes) : data_(bytes) {}

  void Run() {
    if (data_.size() < 2) Throw("truncated: stream shorter than SOI", 0);
    if (data_[0] != 0xFF || data_[1] != 0xD8) Throw("missing SOI", 0);
    pos_ = 2;
    bool first_segment = true;
    for (;;) {
      const size_t marker_pos = pos_;
      if (pos_ >= data_.size()) Throw("truncated: missing EOI", pos_);
      if (data_[pos_] != 0xFF) Throw("expected marker", pos_);
      while (pos_ < data_.size() && data_[pos_] == 0xFF) ++pos_;
      if (pos_ >= data_.size()) Throw("truncated: missing EOI", pos_);
      const uint8_t marker = data_[pos_++];

      if (marker == 0xD9) {
        if (!have_scan_) Throw("marker order: EOI before SOS", marker_pos);
        if (pos_ != data_.size()) Throw("data after EOI", pos_);
        return;
      }
      if (first_segment && marker != 0xE0) {
        Throw("marker order: JFIF APP0 must follow SOI", marker_pos);
      }
      if (marker == 0xD8 || marker == 0x01 ||
          (marker >= 0xD0 && marker <= 0xD7)) {
        Throw("unexpected standalone marker", marker_pos);
      }
      if (pos_ + 2 > data_.size()) Throw("truncated: segment length", pos_);
      const size_t length = (data_[pos_] << 8) | data_[pos_ + 1];
      if (length < 2) Throw("segment length below 2", pos_);
      if (pos_ + length > data_.size()) {
        Throw("truncated: segment extends past end of data", marker_pos);
      }
      seg_ = data_.subspan(pos_ + 2, length - 2);
      seg_offset_ = pos_ + 2;
      pos_ += length;

      switch (marker) {
        case 0xE0:
          if (first_segment) CheckJfif(marker_pos);
          break;
        case 0xDB:
          CheckDqt();
          break;
        case 0xC0:
          CheckSof(marker_pos);
          break;
        case 0xC4:
          CheckDht();
          break;
        case 0xDA:
          CheckSos(marker_pos);
          SkipEntropyData();
          break;
        case 0xDD:
          if (seg_.size() != 2) Throw("segment length mismatch: DRI", marker_pos);
          break;
        default:
          if (marker >= 0xC1 && marker <= 0xCF) {
            Throw("non-baseline frame or coding type", marker_pos);
          }
          if (!(marker >= 0xE1 && marker <= 0xEF) && marker != 0xFE) {
            Throw("unknown marker", marker_pos);
          }
          break;
      }
      first_segment = false;
    }
  }

 private:
  [[noreturn]] void Throw(const std::string& what, size_t offset) {
    throw Violation{what, offset};
  }

  void CheckJfif(size_t at) {
    if (seg_.size() != 14 || std::memcmp(seg_.data(), "JFIF\0", 5) != 0) {
      Throw("malformed JFIF APP0", at);
    }
    if (seg_[5] != 1) Throw("unsupported JFIF major version", at);
  }

  void CheckDqt() {
    size_t i = 0;
    while (i < seg_.size()) {
      const uint8_t pq_tq = seg_[i++];
      if ((pq_tq >> 4) != 0) {
        Throw("non-baseline quant precision", seg_offset_ + i - 1);
      }
      const int id = pq_tq & 0x0F;
      if (id > 3) Throw("quant table id above 3", seg_offset_ + i - 1);
      if (i + 64 > seg_.size()) {
        Throw("segment length mismatch: DQT", seg_offset_);
      }
      for (int k = 0; k < 64; ++k, ++i) {
        if (seg_[i] == 0) Throw("quant value out of range", seg_offset_ + i);
      }
      quant_defined_[id] = true;
    }
  }

  void CheckSof(size_t at) {
    if (have_frame_) Throw("marker order: second SOF", at);
    if (seg_.size() < 6) Throw("segment length mismatch: SOF0", at);
    if (seg_[0] != 8) Throw("non-baseline sample precision", at);
    const int height = (seg_[1] << 8) | seg_[2];
    const int width = (seg_[3] << 8) | seg_[4];
    if (width == 0 || height == 0) Throw("zero image dimension", at);
    ncomp_ = seg_[5];
    if (ncomp_ < 1 || ncomp_ > 4) Throw("component count out of range", at);
    if (seg_.size() != 6 + 3 * static_cast<size_t>(ncomp_)) {
      Throw("segment length mismatch: SOF0", at);
    }
    for (int c = 0; c < ncomp_; ++c) {
      const uint8_t hv = seg_[7 + 3 * c];
      const int h = hv >> 4;
      const int v = hv & 0x0F;
      if (h < 1 || h > 4 || v < 1 || v > 4) {
        Throw("sampling factor out of range", at);
      }
      const int tq = seg_[8 + 3 * c];
      if (tq > 3 || !quant_defined_[tq]) {
        Throw("marker order: frame references undefined quant table", at);
      }
      comp_ids_[c] = seg_[6 + 3 * c];
    }
    have_frame_ = true;
  }

  void CheckDht() {
    size_t i = 0;
    while (i < seg_.size()) {
      const uint8_t tc_th = seg_[i++];
      const int cls = tc_th >> 4;
      const int id = tc_th & 0x0F;
      if (cls > 1) Throw("invalid Huffman table class", seg_offset_ + i - 1);
      if (id > 1) Throw("non-baseline Huffman table id", seg_offset_ + i - 1);
      if (i + 16 > seg_.size()) Throw("segment length mismatch: DHT", seg_offset_);
      HuffmanSpec spec;
      size_t total = 0;
      for (int l = 1; l <= 16; ++l) {
        spec.counts[l] = seg_[i++];
        total += spec.counts[l];
      }
      if (i + total > seg_.size()) {
        Throw("segment length mismatch: DHT", seg_offset_);
      }
      spec.symbols.assign(seg_.begin() + i, seg_.begin() + i + total);
      i += total;
      std::string why;
      if (!ValidateHuffmanSpec(spec, &why)) {
        Throw("invalid Huffman table: " + why, seg_offset_);
      }
      for (uint8_t s : spec.symbols) {
        const bool ok = cls == 0 ? s <= 11
                                 : ((s & 0x0F) >= 1 && (s & 0x0F) <= 10) ||
                                       s == 0x00 || s == 0xF0;
        if (!ok) Throw("invalid Huffman table: symbol out of range", seg_offset_);
      }
      (cls == 0 ? dc_defined_ : ac_defined_)[id] = true;
    }
  }

  void CheckSos(size_t at) {
    if (!have_frame_) Throw("marker order: SOS before SOF0", at);
    if (have_scan_) Throw("non-baseline: more than one scan", at);
    if (seg_.empty()) Throw("segment length mismatch: SOS", at);
    const int ns = seg_[0];
    if (ns < 1 || ns > 4 || seg_.size() != 4 + 2 * static_cast<size_t>(ns)) {
      Throw("segment length mismatch: SOS", at);
    }
    for (int c = 0; c < ns; ++c) {
      bool known = false;
      for (int k = 0; k < ncomp_; ++k) known |= comp_ids_[k] == seg_[1 + 2 * c];
      if (!known) Throw("scan references unknown component", at);
      const int td = seg_[2 + 2 * c] >> 4;
      const int ta = seg_[2 + 2 * c] & 0x0F;
      if (td > 1 || ta > 1 || !dc_defined_[td] || !ac_defined_[ta]) {
        Throw("marker order: scan references undefined Huffman table", at);
      }
    }
    const size_t tail = 1 + 2 * static_cast<size_t>(ns);
    if (seg_[tail] != 0 || seg_[tail + 1] != 63 || seg_[tail + 2] != 0) {
      Throw("non-baseline spectral selection or approximation", at);
    }
    have_scan_ = true;
  }

  // Advances pos_ to the marker that ends the entropy-coded segment.
  void SkipEntropyData() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == 0xFF && pos_ + 1 < data_.size()) {
        const uint8_t next = data_[pos_ + 1];
        if (next == 0x00) {
          pos_ += 2;
          continue;
        }
        if (next >= 0xD0 && next <= 0xD7) {
          Throw("restart marker without DRI", pos_);
        }
        if (next != 0xFF) return;
      }
      ++pos_;
    }
    Throw("truncated: entropy-coded data runs to end of stream", pos_);
  }

  std::span<const uint8_t> data_;
  size_t pos_ = 0;
  std::span<const uint8_t> seg_;
  size_t seg_offset_ = 0;
  std::array<bool, 4> quant_defined_{};
  std::array<bool, 2> dc_defined_{};
  std::array<bool, 2> ac_defined_{};
  std::array<int, 4> comp_ids_{};
  int ncomp_ = 0;
  bool have_frame_ = false;
  bool have_scan_ = false;
};

}  // namespace

ConformanceReport CheckConformance(std::span<const uint8_t> bytes) {
  ConformanceReport report;
  try {
    Checker(bytes).Run();
  } catch (const Violation& v) {
    report.ok = false;
    report.violation = v.what;
    report.offset = v.offset;
    return report;
  }
  // Structure is sound; make sure the scan itself decodes.
  try {
    Decode(bytes);
  } catch (const DecodeError& e) {
    report.ok = false;
    report.violation = e.kind() == DecodeError::Kind::kTruncated
                           ? std::string("truncated: ") + e.what()
                           : std::string("entropy data: ") + e.what();
  }
  return report;
}

}  // namespace pjpeg
