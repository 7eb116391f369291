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

#include <array>
#include <optional>
#include <string>

#include "huffman.h"
#include "pjpeg/jpeg.h"
#include "scan_order.h"

namespace pjpeg {

namespace {

using Kind = DecodeError::Kind;

[[noreturn]] void Fail(Kind kind, const std::string& what) {
  throw DecodeError(kind, what);
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  size_t pos() const { return pos_; }
  size_t remaining() const { return data_.size() - pos_; }
  void Seek(size_t pos) { pos_ = pos; }

  uint8_t Byte() {
    if (pos_ >= data_.size()) Fail(Kind::kTruncated, "unexpected end of data");
    return data_[pos_++];
  }
  uint16_t Word() {
    const uint16_t hi = Byte();
    return static_cast<uint16_t>((hi << 8) | Byte());
  }
  std::span<const uint8_t> data() const { return data_; }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

// Reads entropy-coded bits, removing stuffed zero bytes. Stops at the first
// marker; asking for bits past it means the scan was cut short.
class BitReader {
 public:
  BitReader(std::span<const uint8_t> data, size_t pos)
      : data_(data), pos_(pos) {}

  int Bit() {
    if (nbits_ == 0) Refill();
    --nbits_;
    return (byte_ >> nbits_) & 1;
  }

  int32_t Bits(int count) {
    int32_t v = 0;
    for (int i = 0; i < count; ++i) v = (v << 1) | Bit();
    return v;
  }

  // Position just after the last consumed entropy byte.
  size_t pos() const { return pos_; }

 private:
  void Refill() {
    if (pos_ >= data_.size()) {
      Fail(Kind::kTruncated, "entropy-coded data ends inside the scan");
    }
    const uint8_t b = data_[pos_];
    if (b == 0xFF) {
      if (pos_ + 1 >= data_.size()) {
        Fail(Kind::kTruncated, "entropy-coded data ends inside the scan");
      }
      if (data_[pos_ + 1] != 0x00) {
        Fail(Kind::kTruncated, "marker inside the scan before it completed");
      }
      pos_ += 2;
    } else {
      pos_ += 1;
    }
    byte_ = b;
    nbits_ = 8;
  }

  std::span<const uint8_t> data_;
  size_t pos_;
  uint8_t byte_ = 0;
  int nbits_ = 0;
};

int DecodeSymbol(BitReader& bits, const HuffmanDecodeTable& table) {
  int32_t code = bits.Bit();
  int l = 1;
  while (code > table.maxcode[l]) {
    if (l == kMaxHuffmanCodeLength) Fail(Kind::kHuffman, "invalid Huffman code");
    code = (code << 1) | bits.Bit();
    ++l;
  }
  const int32_t index = table.valptr[l] + code - table.mincode[l];
  if (index < 0 || index >= static_cast<int32_t>(table.symbols.size())) {
    Fail(Kind::kHuffman, "Huffman code outside symbol table");
  }
  return table.symbols[index];
}

int32_t Extend(int32_t v, int cat) {
  return cat == 0 ? 0 : v < (1 << (cat - 1)) ? v - (1 << cat) + 1 : v;
}

struct FrameComponent {
  uint8_t id = 0;
  int h = 1;
  int v = 1;
  int quant_id = 0;
  int dc_table = -1;
  int ac_table = -1;
};

}  // namespace

DecodedJpeg Decode(std::span<const uint8_t> bytes) {
  ByteReader in(bytes);
  if (bytes.size() < 2) Fail(Kind::kTruncated, "stream shorter than SOI");
  if (in.Byte() != 0xFF || in.Byte() != 0xD8) {
    Fail(Kind::kMarker, "stream does not start with SOI");
  }

  std::array<std::optional<std::array<int, kDctBlockSize>>, 4> quant;
  std::array<HuffmanDecodeTable, 4> dc_tables, ac_tables;
  std::array<FrameComponent, 3> comps;
  int width = 0;
  int height = 0;
  bool have_frame = false;
  bool have_scan = false;
  std::optional<CoeffImage> image;

  for (;;) {
    uint8_t b = in.Byte();
    if (b != 0xFF) Fail(Kind::kMarker, "expected a marker");
    uint8_t marker = in.Byte();
    while (marker == 0xFF) marker = in.Byte();  // fill bytes

    if (marker == 0xD9) {
      if (!have_scan) Fail(Kind::kMarker, "EOI before any scan");
      break;
    }
    if (marker == 0xD8 || (marker >= 0xD0 && marker <= 0xD7) ||
        marker == 0x01) {
      Fail(Kind::kMarker, "unexpected standalone marker");
    }

    const size_t seg_start = in.pos();
    const uint16_t length = in.Word();
    if (length < 2) Fail(Kind::kMarker, "segment length below 2");
    if (in.remaining() < static_cast<size_t>(length - 2)) {
      Fail(Kind::kTruncated, "segment extends past end of data");
    }
    const size_t seg_end = seg_start + length;

    switch (marker) {
      case 0xDB: {  // DQT
        while (in.pos() < seg_end) {
          const uint8_t pq_tq = in.Byte();
          if ((pq_tq >> 4) != 0) {
            Fail(Kind::kUnsupported, "16-bit quantization table");
          }
          const int id = pq_tq & 0x0F;
          if (id > 3) Fail(Kind::kMarker, "quantization table id above 3");
          std::array<int, kDctBlockSize> table;
          for (int zz = 0; zz < kDctBlockSize; ++zz) {
            table[kZigzagToNatural[zz]] = in.Byte();
          }
          quant[id] = table;
        }
        break;
      }
      case 0xC0: {  // SOF0
        if (have_frame) Fail(Kind::kMarker, "second SOF marker");
        if (in.Byte() != 8) Fail(Kind::kUnsupported, "sample precision not 8");
        height = in.Word();
        width = in.Word();
        if (width == 0 || height == 0) {
          Fail(Kind::kUnsupported, "zero or deferred image dimension");
        }
        if (in.Byte() != 3) Fail(Kind::kUnsupported, "component count not 3");
        for (auto& comp : comps) {
          comp.id = in.Byte();
          const uint8_t hv = in.Byte();
          comp.h = hv >> 4;
          comp.v = hv & 0x0F;
          comp.quant_id = in.Byte();
          if (comp.quant_id > 3) Fail(Kind::kMarker, "bad quant table id");
        }
        have_frame = true;
        break;
      }
      case 0xC4: {  // DHT
        while (in.pos() < seg_end) {
          const uint8_t tc_th = in.Byte();
          const int cls = tc_th >> 4;
          const int id = tc_th & 0x0F;
          if (cls > 1 || id > 3) Fail(Kind::kMarker, "bad Huffman table id");
          HuffmanSpec spec;
          size_t total = 0;
          for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) {
            spec.counts[l] = in.Byte();
            total += spec.counts[l];
          }
          for (size_t i = 0; i < total; ++i) spec.symbols.push_back(in.Byte());
          std::string why;
          if (!ValidateHuffmanSpec(spec, &why)) {
            Fail(Kind::kHuffman, "invalid Huffman table: " + why);
          }
          (cls == 0 ? dc_tables : ac_tables)[id] = MakeDecodeTable(spec);
        }
        break;
      }
      case 0xDA: {  // SOS
        if (!have_frame) Fail(Kind::kMarker, "SOS before SOF");
        if (have_scan) Fail(Kind::kUnsupported, "more than one scan");
        if (in.Byte() != 3) Fail(Kind::kUnsupported, "scan is not interleaved");
        for (auto& comp : comps) {
          if (in.Byte() != comp.id) {
            Fail(Kind::kMarker, "scan components out of frame order");
          }
          const uint8_t td_ta = in.Byte();
          comp.dc_table = td_ta >> 4;
          comp.ac_table = td_ta & 0x0F;
          if (comp.dc_table > 3 || comp.ac_table > 3 ||
              !dc_tables[comp.dc_table].defined ||
              !ac_tables[comp.ac_table].defined) {
            Fail(Kind::kMarker, "scan references undefined Huffman table");
          }
        }
        const uint8_t ss = in.Byte();
        const uint8_t se = in.Byte();
        const uint8_t ahal = in.Byte();
        if (ss != 0 || se != 63 || ahal != 0) {
          Fail(Kind::kUnsupported, "not a sequential scan");
        }
        if (in.pos() != seg_end) Fail(Kind::kMarker, "SOS length mismatch");

        Sampling sampling;
        if (comps[0].h == 1 && comps[0].v == 1) {
          sampling = Sampling::kYuv444;
        } else if (comps[0].h == 2 && comps[0].v == 2) {
          sampling = Sampling::kYuv420;
        } else {
          Fail(Kind::kUnsupported, "unsupported luma sampling factors");
        }
        for (int c = 1; c < 3; ++c) {
          if (comps[c].h != 1 || comps[c].v != 1) {
            Fail(Kind::kUnsupported, "unsupported chroma sampling factors");
          }
        }
        QuantTable qt;
        for (int c = 0; c < 3; ++c) {
          if (!quant[comps[c].quant_id]) {
            Fail(Kind::kMarker, "frame references undefined quant table");
          }
          qt.values[c] = *quant[comps[c].quant_id];
        }
        image = MakeCoeffImage(width, height, sampling, qt);

        std::array<int, 3> gw, gh;
        for (int c = 0; c < 3; ++c) {
          gw[c] = image->components[c].width_in_blocks;
          gh[c] = image->components[c].height_in_blocks;
        }
        BitReader bits(bytes, in.pos());
        std::array<int32_t, 3> pred{};
        ForEachScanBlock(sampling, gw, gh, [&](int c, int bx, int by,
                                               bool padding) {
          CoeffBlock block{};
          const int dc_cat = DecodeSymbol(bits, dc_tables[comps[c].dc_table]);
          if (dc_cat > 11) Fail(Kind::kHuffman, "DC category above 11");
          pred[c] += Extend(bits.Bits(dc_cat), dc_cat);
          block[0] = pred[c];
          for (int k = 1; k < kDctBlockSize;) {
            const int rs = DecodeSymbol(bits, ac_tables[comps[c].ac_table]);
            const int run = rs >> 4;
            const int size = rs & 0x0F;
            if (size == 0) {
              if (run == 15) {
                k += 16;
                continue;
              }
              if (run != 0) Fail(Kind::kHuffman, "invalid AC symbol");
              break;  // EOB
            }
            if (size > 10) Fail(Kind::kHuffman, "AC category above 10");
            k += run;
            if (k >= kDctBlockSize) {
              Fail(Kind::kHuffman, "run past end of block");
            }
            block[kZigzagToNatural[k]] = Extend(bits.Bits(size), size);
            ++k;
          }
          if (!padding) image->components[c].at(bx, by) = block;
        });
        in.Seek(bits.pos());
        have_scan = true;
        break;
      }
      case 0xDD: {  // DRI
        if (in.Word() != 0) Fail(Kind::kUnsupported, "restart intervals");
        break;
      }
      default:
        if ((marker >= 0xC1 && marker <= 0xCF) && marker != 0xC4 &&
            marker != 0xC8 && marker != 0xCC) {
          Fail(Kind::kUnsupported, "non-baseline frame type");
        }
        if (!(marker >= 0xE0 && marker <= 0xEF) && marker != 0xFE) {
          Fail(Kind::kMarker, "unknown marker segment");
        }
        break;
    }
    if (marker != 0xDA) {
      if (in.pos() > seg_end) Fail(Kind::kMarker, "segment overruns its length");
      in.Seek(seg_end);
    }
  }

  DecodedJpeg out;
  out.pixels = Reconstruct(*image);
  out.coeffs = std::move(*image);
  return out;
}

}  // namespace pjpeg
