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
#include <string>

#include "huffman.h"
#include "pjpeg/jpeg.h"
#include "scan_order.h"

namespace pjpeg {

namespace {

constexpr int kDcLuma = 0;
constexpr int kAcLuma = 1;
constexpr int kDcChroma = 2;
constexpr int kAcChroma = 3;

int DcTableFor(int component) { return component == 0 ? kDcLuma : kDcChroma; }
int AcTableFor(int component) { return component == 0 ? kAcLuma : kAcChroma; }

class ByteSink {
 public:
  void Byte(uint8_t b) { out_.push_back(b); }
  void Word(uint16_t w) {
    Byte(static_cast<uint8_t>(w >> 8));
    Byte(static_cast<uint8_t>(w & 0xFF));
  }
  void Marker(uint8_t m) {
    Byte(0xFF);
    Byte(m);
  }
  std::vector<uint8_t>& bytes() { return out_; }

 private:
  std::vector<uint8_t> out_;
};

// MSB-first bit packer with 0xFF byte stuffing.
class BitWriter {
 public:
  explicit BitWriter(std::vector<uint8_t>* out) : out_(out) {}

  void Write(uint32_t bits, int count) {
    if (count == 0) return;
    acc_ = (acc_ << count) | (bits & ((1u << count) - 1));
    nbits_ += count;
    while (nbits_ >= 8) {
      const uint8_t byte = static_cast<uint8_t>(acc_ >> (nbits_ - 8));
      out_->push_back(byte);
      if (byte == 0xFF) out_->push_back(0x00);
      nbits_ -= 8;
    }
    acc_ &= (1u << nbits_) - 1;
  }

  // Pads the final byte with one bits.
  void Flush() {
    if (nbits_ > 0) Write(0x7F, 8 - nbits_);
  }

 private:
  std::vector<uint8_t>* out_;
  uint32_t acc_ = 0;
  int nbits_ = 0;
};

// Receives the symbol stream of one block. Used once to count and once to
// write.
template <typename Emit>
void CodeBlock(const CoeffBlock& block, int32_t dc_pred, int dc_table,
               int ac_table, Emit&& emit) {
  const int32_t diff = block[0] - dc_pred;
  const int dc_cat = MagnitudeCategory(diff);
  emit(dc_table, dc_cat, diff < 0 ? diff - 1 : diff, dc_cat);
  int run = 0;
  for (int zz = 1; zz < kDctBlockSize; ++zz) {
    const int32_t v = block[kZigzagToNatural[zz]];
    if (v == 0) {
      ++run;
      continue;
    }
    while (run > 15) {
      emit(ac_table, 0xF0, 0, 0);
      run -= 16;
    }
    const int cat = MagnitudeCategory(v);
    emit(ac_table, (run << 4) | cat, v < 0 ? v - 1 : v, cat);
    run = 0;
  }
  if (run > 0) emit(ac_table, 0x00, 0, 0);
}

void CheckEncodable(const CoeffImage& coeffs) {
  if (!coeffs.quant.IsValid()) {
    throw EncodeError("quantization table entry outside [1, 255]");
  }
  if (coeffs.width < 1 || coeffs.height < 1 || coeffs.width > 65535 ||
      coeffs.height > 65535) {
    throw EncodeError("image dimensions outside baseline range");
  }
  const CoeffImage shape = MakeCoeffImage(coeffs.width, coeffs.height,
                                          coeffs.sampling, coeffs.quant);
  for (int c = 0; c < 3; ++c) {
    const ComponentBlocks& comp = coeffs.components[c];
    if (comp.width_in_blocks != shape.components[c].width_in_blocks ||
        comp.height_in_blocks != shape.components[c].height_in_blocks ||
        comp.blocks.size() != shape.components[c].blocks.size()) {
      throw EncodeError("block grid does not match image geometry");
    }
    for (const CoeffBlock& block : comp.blocks) {
      if (block[0] < kMinDcValue || block[0] > kMaxDcValue) {
        throw EncodeError("DC coefficient " + std::to_string(block[0]) +
                          " outside baseline range");
      }
      for (int k = 1; k < kDctBlockSize; ++k) {
        if (block[k] < -kMaxAcMagnitude || block[k] > kMaxAcMagnitude) {
          throw EncodeError("AC coefficient " + std::to_string(block[k]) +
                            " outside baseline range");
        }
      }
    }
  }
}

// Walks the scan, feeding each block to fn(component, block). Padding blocks
// repeat the previous DC of their component with all AC zero.
template <typename Fn>
void WalkScan(const CoeffImage& coeffs, Fn&& fn) {
  std::array<int, 3> gw, gh;
  for (int c = 0; c < 3; ++c) {
    gw[c] = coeffs.components[c].width_in_blocks;
    gh[c] = coeffs.components[c].height_in_blocks;
  }
  std::array<int32_t, 3> pred{};
  ForEachScanBlock(coeffs.sampling, gw, gh,
                   [&](int c, int bx, int by, bool padding) {
                     CoeffBlock pad{};
                     const CoeffBlock* block = &pad;
                     if (padding) {
                       pad[0] = pred[c];
                     } else {
                       block = &coeffs.components[c].at(bx, by);
                     }
                     fn(c, *block, pred[c]);
                     pred[c] = (*block)[0];
                   });
}

void WriteHuffmanTable(ByteSink& sink, uint8_t class_and_id,
                       const HuffmanSpec& spec) {
  sink.Byte(class_and_id);
  for (int l = 1; l <= kMaxHuffmanCodeLength; ++l) sink.Byte(spec.counts[l]);
  for (uint8_t s : spec.symbols) sink.Byte(s);
}

}  // namespace

EncodedJpeg EntropyEncode(const CoeffImage& coeffs) {
  CheckEncodable(coeffs);

  std::array<SymbolHistogram, 4> histograms{};
  WalkScan(coeffs, [&](int c, const CoeffBlock& block, int32_t pred) {
    CodeBlock(block, pred, DcTableFor(c), AcTableFor(c),
              [&](int table, int symbol, int32_t, int) {
                ++histograms[table][symbol];
              });
  });
  std::array<HuffmanSpec, 4> specs;
  std::array<HuffmanEncodeTable, 4> tables;
  for (int t = 0; t < 4; ++t) {
    specs[t] = BuildOptimalHuffman(histograms[t]);
    tables[t] = MakeEncodeTable(specs[t]);
  }

  const bool separate_cr = coeffs.quant.values[2] != coeffs.quant.values[1];
  const int num_quant = separate_cr ? 3 : 2;

  ByteSink sink;
  sink.Marker(0xD8);  // SOI

  sink.Marker(0xE0);  // APP0
  sink.Word(16);
  for (char ch : {'J', 'F', 'I', 'F', '\0'}) sink.Byte(static_cast<uint8_t>(ch));
  sink.Byte(1);  // version 1.01
  sink.Byte(1);
  sink.Byte(0);  // no units, 1:1 aspect
  sink.Word(1);
  sink.Word(1);
  sink.Byte(0);  // no thumbnail
  sink.Byte(0);

  sink.Marker(0xDB);  // DQT
  sink.Word(static_cast<uint16_t>(2 + num_quant * 65));
  for (int t = 0; t < num_quant; ++t) {
    sink.Byte(static_cast<uint8_t>(t));  // 8-bit precision, id t
    for (int zz = 0; zz < kDctBlockSize; ++zz) {
      sink.Byte(static_cast<uint8_t>(coeffs.quant.values[t][kZigzagToNatural[zz]]));
    }
  }

  sink.Marker(0xC0);  // SOF0
  sink.Word(8 + 3 * 3);
  sink.Byte(8);
  sink.Word(static_cast<uint16_t>(coeffs.height));
  sink.Word(static_cast<uint16_t>(coeffs.width));
  sink.Byte(3);
  const uint8_t luma_sampling =
      coeffs.sampling == Sampling::kYuv420 ? 0x22 : 0x11;
  const std::array<uint8_t, 3> quant_ids = {0, 1,
                                            static_cast<uint8_t>(separate_cr ? 2 : 1)};
  for (int c = 0; c < 3; ++c) {
    sink.Byte(kComponentIds[c]);
    sink.Byte(c == 0 ? luma_sampling : 0x11);
    sink.Byte(quant_ids[c]);
  }

  sink.Marker(0xC4);  // DHT
  size_t dht_length = 2;
  for (const auto& spec : specs) dht_length += 17 + spec.symbols.size();
  sink.Word(static_cast<uint16_t>(dht_length));
  WriteHuffmanTable(sink, 0x00, specs[kDcLuma]);
  WriteHuffmanTable(sink, 0x10, specs[kAcLuma]);
  WriteHuffmanTable(sink, 0x01, specs[kDcChroma]);
  WriteHuffmanTable(sink, 0x11, specs[kAcChroma]);

  sink.Marker(0xDA);  // SOS
  sink.Word(6 + 2 * 3);
  sink.Byte(3);
  for (int c = 0; c < 3; ++c) {
    sink.Byte(kComponentIds[c]);
    sink.Byte(c == 0 ? 0x00 : 0x11);
  }
  sink.Byte(0);   // Ss
  sink.Byte(63);  // Se
  sink.Byte(0);   // Ah/Al

  BitWriter bits(&sink.bytes());
  WalkScan(coeffs, [&](int c, const CoeffBlock& block, int32_t pred) {
    CodeBlock(block, pred, DcTableFor(c), AcTableFor(c),
              [&](int table, int symbol, int32_t extra, int extra_bits) {
                const HuffmanEncodeTable& t = tables[table];
                bits.Write(t.code[symbol], t.length[symbol]);
                bits.Write(static_cast<uint32_t>(extra), extra_bits);
              });
  });
  bits.Flush();

  sink.Marker(0xD9);  // EOI
  return EncodedJpeg{std::move(sink.bytes())};
}

EncodedJpeg EncodeImage(const RgbImage& img, const QuantTable& quant,
                        Sampling sampling) {
  return EntropyEncode(ForwardTransform(img, quant, sampling));
}

}  // namespace pjpeg
