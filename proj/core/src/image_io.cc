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

#include "pjpeg/image_io.h"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "pjpeg/jpeg.h"

namespace pjpeg {

namespace {

using Kind = ImageIoError::Kind;

bool IsPng(std::span<const uint8_t> bytes) {
  static const uint8_t kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  return bytes.size() >= 8 && std::memcmp(bytes.data(), kSignature, 8) == 0;
}

bool IsJpeg(std::span<const uint8_t> bytes) {
  return bytes.size() >= 2 && bytes[0] == 0xFF && bytes[1] == 0xD8;
}

bool IsPpm(std::span<const uint8_t> bytes) {
  return bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6';
}

// Reads the next whitespace-delimited PNM header integer, skipping comments.
int ReadPnmInt(std::span<const uint8_t> bytes, size_t* pos) {
  size_t& p = *pos;
  for (;;) {
    while (p < bytes.size() && std::isspace(bytes[p])) ++p;
    if (p < bytes.size() && bytes[p] == '#') {
      while (p < bytes.size() && bytes[p] != '\n') ++p;
      continue;
    }
    break;
  }
  if (p >= bytes.size() || !std::isdigit(bytes[p])) {
    throw ImageIoError(Kind::kMalformed, "malformed PPM header");
  }
  long v = 0;
  while (p < bytes.size() && std::isdigit(bytes[p])) {
    v = v * 10 + (bytes[p++] - '0');
    if (v > 1 << 24) throw ImageIoError(Kind::kMalformed, "PPM value too large");
  }
  return static_cast<int>(v);
}

struct PngReadState {
  std::span<const uint8_t> bytes;
  size_t pos = 0;
};

void PngRead(png_structp png, png_bytep out, png_size_t length) {
  auto* state = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (state->pos + length > state->bytes.size()) {
    png_error(png, "unexpected end of PNG data");
  }
  std::memcpy(out, state->bytes.data() + state->pos, length);
  state->pos += length;
}

void PngWrite(png_structp png, png_bytep data, png_size_t length) {
  auto* out = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + length);
}

void PngFlush(png_structp) {}

[[noreturn]] void PngErrorHandler(png_structp, png_const_charp message) {
  throw ImageIoError(Kind::kMalformed, std::string("PNG: ") + message);
}

void PngWarningHandler(png_structp, png_const_charp) {}

}  // namespace

std::vector<uint8_t> ReadFileBytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageIoError(Kind::kIo, "cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  if (in.bad()) throw ImageIoError(Kind::kIo, "cannot read " + path.string());
  return bytes;
}

void WriteFileBytes(const std::filesystem::path& path,
                    std::span<const uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) throw ImageIoError(Kind::kIo, "cannot write " + path.string());
}

RgbImage DecodePpm(std::span<const uint8_t> bytes) {
  if (!IsPpm(bytes)) {
    throw ImageIoError(Kind::kUnsupportedFormat, "not a binary PPM (P6)");
  }
  size_t pos = 2;
  const int width = ReadPnmInt(bytes, &pos);
  const int height = ReadPnmInt(bytes, &pos);
  const int maxval = ReadPnmInt(bytes, &pos);
  if (width < 1 || height < 1) {
    throw ImageIoError(Kind::kMalformed, "PPM dimensions must be positive");
  }
  if (maxval != 255) {
    throw ImageIoError(Kind::kUnsupportedDepth, "PPM maxval must be 255");
  }
  if (pos >= bytes.size() || !std::isspace(bytes[pos])) {
    throw ImageIoError(Kind::kMalformed, "malformed PPM header");
  }
  ++pos;
  const size_t n = static_cast<size_t>(width) * height * 3;
  if (bytes.size() - pos < n) {
    throw ImageIoError(Kind::kMalformed, "PPM pixel data truncated");
  }
  return RgbImage(width, height,
                  std::vector<uint8_t>(bytes.begin() + pos, bytes.begin() + pos + n));
}

std::vector<uint8_t> EncodePpm(const RgbImage& img) {
  const std::string header = "P6\n" + std::to_string(img.width()) + " " +
                             std::to_string(img.height()) + "\n255\n";
  std::vector<uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.samples().begin(), img.samples().end());
  return out;
}

RgbImage DecodePng(std::span<const uint8_t> bytes) {
  if (!IsPng(bytes)) throw ImageIoError(Kind::kUnsupportedFormat, "not a PNG");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           PngErrorHandler, PngWarningHandler);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw ImageIoError(Kind::kIo, "libpng initialization failed");
  }
  struct Guard {
    png_structp* png;
    png_infop* info;
    ~Guard() { png_destroy_read_struct(png, info, nullptr); }
  } guard{&png, &info};

  PngReadState state{bytes, 0};
  png_set_read_fn(png, &state, PngRead);
  png_read_info(png, info);
  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int depth = png_get_bit_depth(png, info);
  const int color = png_get_color_type(png, info);
  if (depth > 8) {
    throw ImageIoError(Kind::kUnsupportedDepth,
                       "PNG bit depth " + std::to_string(depth) + " unsupported");
  }
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  const size_t channels = png_get_channels(png, info);
  const size_t rowbytes = png_get_rowbytes(png, info);
  std::vector<uint8_t> raw(rowbytes * height);
  std::vector<png_bytep> rows(height);
  for (png_uint_32 y = 0; y < height; ++y) rows[y] = raw.data() + y * rowbytes;
  png_read_image(png, rows.data());

  RgbImage img(static_cast<int>(width), static_cast<int>(height));
  for (png_uint_32 y = 0; y < height; ++y) {
    for (png_uint_32 x = 0; x < width; ++x) {
      const uint8_t* p = rows[y] + x * channels;
      uint8_t rgb[3] = {p[0], p[1], p[2]};
      if (channels == 4) {
        // Composite over white.
        const int a = p[3];
        for (int c = 0; c < 3; ++c) {
          rgb[c] = static_cast<uint8_t>((p[c] * a + 255 * (255 - a) + 127) / 255);
        }
      }
      img.SetPixel(static_cast<int>(x), static_cast<int>(y), rgb[0], rgb[1], rgb[2]);
    }
  }
  return img;
}

std::vector<uint8_t> EncodePng(const RgbImage& img) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            PngErrorHandler, PngWarningHandler);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, nullptr);
    throw ImageIoError(Kind::kIo, "libpng initialization failed");
  }
  struct Guard {
    png_structp* png;
    png_infop* info;
    ~Guard() { png_destroy_write_struct(png, info); }
  } guard{&png, &info};

  std::vector<uint8_t> out;
  png_set_write_fn(png, &out, PngWrite, PngFlush);
  png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < img.height(); ++y) {
    png_write_row(png, const_cast<png_bytep>(img.samples().data() +
                                             static_cast<size_t>(y) * img.width() * 3));
  }
  png_write_end(png, nullptr);
  return out;
}

RgbImage LoadImage(const std::filesystem::path& path) {
  const std::vector<uint8_t> bytes = ReadFileBytes(path);
  if (IsPng(bytes)) return DecodePng(bytes);
  if (IsPpm(bytes)) return DecodePpm(bytes);
  if (IsJpeg(bytes)) {
    try {
      return Decode(bytes).pixels;
    } catch (const DecodeError& e) {
      throw ImageIoError(Kind::kMalformed, path.string() + ": " + e.what());
    }
  }
  throw ImageIoError(Kind::kUnsupportedFormat,
                     path.string() + ": unsupported image format");
}

}  // namespace pjpeg
