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


#include "test_util.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "pjpeg/image_io.h"
#include "pjpeg/metric.h"
#include "pjpeg/optimizer.h"
#include "pjpeg/quant_tables.h"

namespace pjpeg::testing {

std::filesystem::path TestDataDir() { return PJPEG_TEST_DATA_DIR; }

std::filesystem::path CorpusDir() { return TestDataDir() / "corpus"; }

DctBlock NaiveDct(const DctBlock& samples) {
  DctBlock out{};
  for (int v = 0; v < 8; ++v) {
    for (int u = 0; u < 8; ++u) {
      const double cu = u == 0 ? std::sqrt(0.125) : 0.5;
      const double cv = v == 0 ? std::sqrt(0.125) : 0.5;
      double sum = 0.0;
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          sum += samples[y * 8 + x] *
                 std::cos((2 * x + 1) * u * std::numbers::pi / 16.0) *
                 std::cos((2 * y + 1) * v * std::numbers::pi / 16.0);
        }
      }
      out[v * 8 + u] = cu * cv * sum;
    }
  }
  return out;
}

RgbImage UniformNoiseImage(int width, int height, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(0, 255);
  RgbImage img(width, height);
  for (uint8_t& s : img.mutable_samples()) s = static_cast<uint8_t>(dist(rng));
  return img;
}

RgbImage FlatImage(int width, int height, uint8_t r, uint8_t g, uint8_t b) {
  RgbImage img(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) img.SetPixel(x, y, r, g, b);
  }
  return img;
}

CoeffImage RandomCoeffImage(int width, int height, Sampling sampling,
                            bool three_tables, std::mt19937& rng) {
  QuantTable quant = ScaledAnnexKTable(0.5);
  if (three_tables) {
    for (int& q : quant.values[2]) q = std::min(255, q + 3);
  }
  CoeffImage coeffs = MakeCoeffImage(width, height, sampling, quant);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (ComponentBlocks& comp : coeffs.components) {
    for (CoeffBlock& block : comp.blocks) {
      const double density = unit(rng);
      for (int k = 0; k < kDctBlockSize; ++k) {
        const double r = unit(rng);
        int32_t v;
        if (r < 0.002) {
          v = k == 0 ? (unit(rng) < 0.5 ? kMinDcValue : kMaxDcValue)
                     : (unit(rng) < 0.5 ? -kMaxAcMagnitude : kMaxAcMagnitude);
        } else if (k == 0) {
          v = std::uniform_int_distribution<int>(-400, 400)(rng);
        } else {
          const double keep = density / (1.0 + 0.3 * ZigzagRadius(k));
          if (unit(rng) > keep) {
            v = 0;
          } else {
            std::geometric_distribution<int> mag(0.25);
            v = 1 + mag(rng);
            if (unit(rng) < 0.5) v = -v;
          }
        }
        block[k] = v;
      }
    }
  }
  return coeffs;
}

namespace {

struct ByteReader {
  std::span<const uint8_t> bytes;
  size_t pos = 0;

  uint8_t Byte() {
    if (pos >= bytes.size()) throw std::runtime_error("unexpected end");
    return bytes[pos++];
  }
  int Word() {
    const int hi = Byte();
    return (hi << 8) | Byte();
  }
};

// code length -> (code -> symbol)
using CodeBook = std::map<std::pair<int, int>, uint8_t>;

CodeBook BuildCodeBook(const uint8_t counts[17],
                       const std::vector<uint8_t>& symbols) {
  CodeBook book;
  int code = 0;
  size_t next = 0;
  for (int len = 1; len <= 16; ++len) {
    for (int i = 0; i < counts[len]; ++i) {
      book[{len, code}] = symbols.at(next++);
      ++code;
    }
    code <<= 1;
  }
  return book;
}

class BitReader {
 public:
  BitReader(std::span<const uint8_t> bytes, size_t pos)
      : bytes_(bytes), pos_(pos) {}

  int Bit() {
    ++consumed_;
    if (bits_left_ == 0) {
      if (pos_ >= bytes_.size()) throw std::runtime_error("scan truncated");
      current_ = bytes_[pos_++];
      if (current_ == 0xFF) {
        if (pos_ >= bytes_.size() || bytes_[pos_] != 0x00) {
          throw std::runtime_error("marker inside scan");
        }
        ++pos_;
      }
      bits_left_ = 8;
    }
    --bits_left_;
    return (current_ >> bits_left_) & 1;
  }

  int Bits(int n) {
    int v = 0;
    for (int i = 0; i < n; ++i) v = (v << 1) | Bit();
    return v;
  }

  uint8_t Symbol(const CodeBook& book) {
    int code = 0;
    for (int len = 1; len <= 16; ++len) {
      code = (code << 1) | Bit();
      auto it = book.find({len, code});
      if (it != book.end()) return it->second;
    }
    throw std::runtime_error("no matching code");
  }

  size_t consumed() const { return consumed_; }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_;
  uint8_t current_ = 0;
  int bits_left_ = 0;
  size_t consumed_ = 0;
};

}  // namespace

std::vector<uint8_t> ListMarkers(std::span<const uint8_t> bytes) {
  std::vector<uint8_t> markers;
  ByteReader in{bytes};
  while (in.pos < bytes.size()) {
    if (in.Byte() != 0xFF) throw std::runtime_error("expected marker");
    const uint8_t m = in.Byte();
    markers.push_back(m);
    if (m == 0xD8 || m == 0xD9) continue;
    const int length = in.Word();
    in.pos += length - 2;
    if (m == 0xDA) {
      // Skip entropy-coded data up to the next real marker.
      while (in.pos + 1 < bytes.size() &&
             !(bytes[in.pos] == 0xFF && bytes[in.pos + 1] != 0x00)) {
        ++in.pos;
      }
    }
  }
  return markers;
}

ScanContents ReadScan(std::span<const uint8_t> bytes) {
  ScanContents scan;
  ByteReader in{bytes};
  if (in.Byte() != 0xFF || in.Byte() != 0xD8) {
    throw std::runtime_error("missing SOI");
  }
  CodeBook dc_books[4], ac_books[4];
  int width = 0, height = 0;
  struct Comp {
    int id, h, v, dc = 0, ac = 0;
  };
  std::vector<Comp> comps;
  while (true) {
    if (in.Byte() != 0xFF) throw std::runtime_error("expected marker");
    const uint8_t m = in.Byte();
    const size_t start = in.pos;
    const int length = in.Word();
    if (m == 0xC4) {
      scan.dht_bytes += 2 + length;
      while (in.pos < start + length) {
        const uint8_t tc_th = in.Byte();
        uint8_t counts[17] = {};
        int total = 0;
        for (int l = 1; l <= 16; ++l) total += counts[l] = in.Byte();
        std::vector<uint8_t> symbols(total);
        for (uint8_t& s : symbols) s = in.Byte();
        CodeBook& book = (tc_th >> 4) ? ac_books[tc_th & 3] : dc_books[tc_th & 3];
        book = BuildCodeBook(counts, symbols);
      }
    } else if (m == 0xC0) {
      in.Byte();
      height = in.Word();
      width = in.Word();
      const int n = in.Byte();
      for (int i = 0; i < n; ++i) {
        Comp c;
        c.id = in.Byte();
        const uint8_t hv = in.Byte();
        c.h = hv >> 4;
        c.v = hv & 15;
        in.Byte();
        comps.push_back(c);
      }
    } else if (m == 0xDA) {
      const int n = in.Byte();
      for (int i = 0; i < n; ++i) {
        const int id = in.Byte();
        const uint8_t tables = in.Byte();
        for (Comp& c : comps) {
          if (c.id == id) {
            c.dc = tables >> 4;
            c.ac = tables & 15;
          }
        }
      }
      in.pos = start + length;
      break;
    }
    in.pos = start + length;
  }

  int hmax = 1, vmax = 1;
  for (const Comp& c : comps) {
    hmax = std::max(hmax, c.h);
    vmax = std::max(vmax, c.v);
  }
  const int mcus_x = (width + 8 * hmax - 1) / (8 * hmax);
  const int mcus_y = (height + 8 * vmax - 1) / (8 * vmax);

  BitReader bits(bytes, in.pos);
  std::vector<BlockSymbols>& blocks = scan.blocks;
  for (int mcu = 0; mcu < mcus_x * mcus_y; ++mcu) {
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      const Comp& c = comps[ci];
      for (int b = 0; b < c.h * c.v; ++b) {
        BlockSymbols block;
        block.component = static_cast<int>(ci);
        block.dc_category = bits.Symbol(dc_books[c.dc]);
        bits.Bits(block.dc_category);
        for (int k = 1; k < 64;) {
          const uint8_t s = bits.Symbol(ac_books[c.ac]);
          block.ac_symbols.push_back(s);
          if (s == 0x00) break;
          if (s == 0xF0) {
            k += 16;
            continue;
          }
          k += (s >> 4);
          bits.Bits(s & 15);
          ++k;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  scan.coded_bits = bits.consumed();
  return scan;
}

ZeroingTrials RunZeroingTrials(int trials, int crop_size, uint32_t seed) {
  std::vector<RgbImage> corpus;
  for (const auto& entry : std::filesystem::directory_iterator(CorpusDir())) {
    if (entry.path().extension() == ".png") corpus.push_back(LoadImage(entry.path()));
  }
  if (corpus.empty()) throw std::runtime_error("empty corpus");
  std::sort(corpus.begin(), corpus.end(), [](const RgbImage& a, const RgbImage& b) {
    return a.samples() < b.samples();
  });
  const QuantTableSet set = BuildTableSet(16);
  std::mt19937 rng(seed);
  ZeroingTrials result;
  result.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const RgbImage& src = corpus[rng() % corpus.size()];
    const int x0 = static_cast<int>(rng() % (src.width() - crop_size + 1));
    const int y0 = static_cast<int>(rng() % (src.height() - crop_size + 1));
    RgbImage crop(crop_size, crop_size);
    for (int y = 0; y < crop_size; ++y) {
      for (int x = 0; x < crop_size; ++x) {
        for (int c = 0; c < 3; ++c) crop.at(x, y, c) = src.at(x0 + x, y0 + y, c);
      }
    }
    const QuantTable& table = set[4 + rng() % 8];
    CoeffImage coeffs = ForwardTransform(crop, table, Sampling::kYuv444);

    // Candidates: nonzero AC at zigzag i whose predecessors i-r..i-1 are a
    // zero run of length r in [1, 14].
    std::vector<std::tuple<int, size_t, int>> eligible;
    for (int c = 0; c < 3; ++c) {
      const auto& blocks = coeffs.components[c].blocks;
      for (size_t b = 0; b < blocks.size(); ++b) {
        int run = 0;
        for (int z = 1; z < kDctBlockSize; ++z) {
          const int32_t v = blocks[b][kZigzagToNatural[z]];
          if (v == 0) {
            ++run;
            continue;
          }
          if (run >= 1 && run < 15) eligible.emplace_back(c, b, z);
          run = 0;
        }
      }
    }
    if (eligible.empty()) {
      --t;
      continue;
    }
    const auto [c, b, z] = eligible[rng() % eligible.size()];
    const EncodedJpeg before = EntropyEncode(coeffs);
    coeffs.components[c].blocks[b][kZigzagToNatural[z]] = 0;
    const EncodedJpeg after = EntropyEncode(coeffs);
    const ScanContents s0 = ReadScan(before.bytes);
    const ScanContents s1 = ReadScan(after.bytes);
    if (8 * s1.dht_bytes + s1.coded_bits <= 8 * s0.dht_bytes + s0.coded_bits) {
      ++result.coded_not_larger;
    }
    if (after.size() <= before.size()) ++result.file_not_larger;
  }
  return result;
}

std::vector<RankingTrial> GreedyVsExhaustive(int instances, int max_k,
                                             uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<RankingTrial> trials;
  for (int inst = 0; inst < instances; ++inst) {
    // Random base color with noise of random strength, redrawn until every
    // luma AC coefficient is nonzero so that each of the 63 choices is live.
    std::uniform_int_distribution<int> base(40, 215), spread(5, 40);
    RgbImage ref(8, 8);
    CoeffImage coeffs;
    while (true) {
      const int s = spread(rng);
      const int rgb[3] = {base(rng), base(rng), base(rng)};
      for (int y = 0; y < 8; ++y) {
        for (int x = 0; x < 8; ++x) {
          for (int c = 0; c < 3; ++c) {
            const int v =
                rgb[c] + std::uniform_int_distribution<int>(-s, s)(rng);
            ref.at(x, y, c) = static_cast<uint8_t>(std::clamp(v, 0, 255));
          }
        }
      }
      coeffs = ForwardTransform(ref, ScaledAnnexKTable(0.05), Sampling::kYuv444);
      const CoeffBlock& y = coeffs.components[0].blocks[0];
      if (std::all_of(y.begin() + 1, y.end(), [](int v) { return v != 0; })) {
        break;
      }
    }
    const PerceptualMetric metric(ref);
    const ImportanceOrder order = RankCoefficients(coeffs, metric);
    for (int k = 1; k <= max_k; ++k) {
      ZeroPlan plan = ZeroPlan::Empty(coeffs);
      plan.components[0].counts[0] = static_cast<uint8_t>(k);
      const double greedy =
          metric.Distance(Reconstruct(ApplyZeroPlan(coeffs, order, plan)));

      double best = std::numeric_limits<double>::infinity();
      CoeffImage work = coeffs;
      CoeffBlock& block = work.components[0].blocks[0];
      const CoeffBlock& pristine = coeffs.components[0].blocks[0];
      std::vector<int> pick(k);
      // Lexicographic k-subsets of {1..63}.
      for (int i = 0; i < k; ++i) pick[i] = 1 + i;
      while (true) {
        for (int i : pick) block[i] = 0;
        best = std::min(best, metric.Distance(Reconstruct(work)));
        for (int i : pick) block[i] = pristine[i];
        int i = k - 1;
        while (i >= 0 && pick[i] == 63 - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
      trials.push_back({inst, k, greedy, best});
    }
  }
  return trials;
}

RgbImage CorpusCrop(const std::string& name, int x0, int y0, int width,
                    int height) {
  const RgbImage src = LoadImage(CorpusDir() / name);
  RgbImage crop(width, height);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      for (int c = 0; c < 3; ++c) crop.at(x, y, c) = src.at(x0 + x, y0 + y, c);
    }
  }
  return crop;
}

}  // namespace pjpeg::testing
