// Copyright 2026 The IQA Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// PNG (via libpng) and uncompressed BMP readers/writers.

#include <png.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "iqa/error.h"
#include "iqa/image.h"

namespace iqa {

namespace {

std::vector<std::uint8_t> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// ---------------------------------------------------------------------------
// PNG

struct PngReadCursor {
  std::span<const std::uint8_t> bytes;
  std::size_t offset = 0;
};

void PngReadCallback(png_structp png, png_bytep out, png_size_t count) {
  auto* cursor = static_cast<PngReadCursor*>(png_get_io_ptr(png));
  if (cursor->offset + count > cursor->bytes.size()) {
    png_error(png, "truncated PNG stream");
  }
  std::memcpy(out, cursor->bytes.data() + cursor->offset, count);
  cursor->offset += count;
}

void PngWarningCallback(png_structp, png_const_charp) {}

struct PngDecoded {
  png_uint_32 width = 0;
  png_uint_32 height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<std::uint8_t> data;
  std::vector<png_bytep> rows;
};

// libpng reports errors by longjmp: every object with a destructor lives in
// *out, none on this frame.
bool DecodePngInto(PngReadCursor* cursor, PngDecoded* out) {
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           nullptr, PngWarningCallback);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, cursor, PngReadCallback);
  png_read_info(png, info);
  png_set_expand(png);
  png_set_strip_alpha(png);
  if (png_get_bit_depth(png, info) == 16) png_set_swap(png);
  png_set_interlace_handling(png);
  png_read_update_info(png, info);

  out->width = png_get_image_width(png, info);
  out->height = png_get_image_height(png, info);
  out->channels = png_get_channels(png, info);
  out->bit_depth = png_get_bit_depth(png, info);
  const std::size_t stride = png_get_rowbytes(png, info);
  out->data.resize(stride * out->height);
  out->rows.resize(out->height);
  for (png_uint_32 y = 0; y < out->height; ++y) {
    out->rows[y] = out->data.data() + y * stride;
  }
  png_read_image(png, out->rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

void PngWriteCallback(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + count);
}

void PngFlushCallback(png_structp) {}

bool EncodePngInto(const Raster& raster, std::vector<std::uint8_t>* encoded) {
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, PngWarningCallback);
  if (png == nullptr) return false;
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, encoded, PngWriteCallback, PngFlushCallback);
  png_set_IHDR(png, info, raster.width, raster.height, raster.bit_depth,
               raster.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  const std::size_t row_samples =
      static_cast<std::size_t>(raster.width) * raster.channels;
  const std::size_t bytes_per_sample = raster.bit_depth == 16 ? 2 : 1;
  std::vector<png_byte> row(row_samples * bytes_per_sample);
  for (int y = 0; y < raster.height; ++y) {
    const std::uint16_t* src = raster.samples.data() + y * row_samples;
    for (std::size_t i = 0; i < row_samples; ++i) {
      if (bytes_per_sample == 2) {
        row[2 * i] = static_cast<png_byte>(src[i] >> 8);  // big-endian
        row[2 * i + 1] = static_cast<png_byte>(src[i] & 0xff);
      } else {
        row[i] = static_cast<png_byte>(src[i]);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

// ---------------------------------------------------------------------------
// BMP

std::uint32_t ReadLe32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         static_cast<std::uint32_t>(b[at + 1]) << 8 |
         static_cast<std::uint32_t>(b[at + 2]) << 16 |
         static_cast<std::uint32_t>(b[at + 3]) << 24;
}

std::uint16_t ReadLe16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | b[at + 1] << 8);
}

void PutLe32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutLe16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

[[noreturn]] void BadBmp(const std::string& why) {
  throw Error(ErrorCode::kInvalidImage, "invalid BMP: " + why);
}

constexpr std::array<std::uint8_t, 8> kPngSignature = {0x89, 'P',  'N',  'G',
                                                       '\r', '\n', 0x1a, '\n'};

}  // namespace

Raster DecodePng(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPngSignature.size() ||
      !std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
    throw Error(ErrorCode::kInvalidImage, "missing PNG signature");
  }
  PngReadCursor cursor{bytes, 0};
  PngDecoded decoded;
  if (!DecodePngInto(&cursor, &decoded)) {
    throw Error(ErrorCode::kInvalidImage, "corrupt PNG data");
  }
  if ((decoded.channels != 1 && decoded.channels != 3) ||
      (decoded.bit_depth != 8 && decoded.bit_depth != 16)) {
    throw Error(ErrorCode::kInvalidImage, "unsupported PNG pixel layout");
  }
  Raster r{static_cast<int>(decoded.width), static_cast<int>(decoded.height),
           decoded.channels, decoded.bit_depth, {}};
  const std::size_t count =
      static_cast<std::size_t>(r.width) * r.height * r.channels;
  r.samples.resize(count);
  if (r.bit_depth == 16) {
    std::memcpy(r.samples.data(), decoded.data.data(), count * 2);
  } else {
    std::copy_n(decoded.data.begin(), count, r.samples.begin());
  }
  if (r.empty()) throw Error(ErrorCode::kInvalidImage, "empty PNG");
  return r;
}

Raster DecodeBmp(std::span<const std::uint8_t> b) {
  if (b.size() < 54 || b[0] != 'B' || b[1] != 'M') BadBmp("bad header");
  const std::uint32_t pixel_offset = ReadLe32(b, 10);
  const std::uint32_t dib_size = ReadLe32(b, 14);
  if (dib_size < 40 || 14 + dib_size > b.size()) BadBmp("unsupported DIB header");
  const auto width = static_cast<std::int32_t>(ReadLe32(b, 18));
  const auto raw_height = static_cast<std::int32_t>(ReadLe32(b, 22));
  const int bpp = ReadLe16(b, 28);
  const std::uint32_t compression = ReadLe32(b, 30);
  std::uint32_t palette_size = ReadLe32(b, 46);
  if (width <= 0 || raw_height == 0) BadBmp("bad dimensions");
  const bool top_down = raw_height < 0;
  const int height = top_down ? -raw_height : raw_height;
  if (bpp != 8 && bpp != 24 && bpp != 32) {
    BadBmp("unsupported bit count " + std::to_string(bpp));
  }
  if (compression != 0 && !(compression == 3 && bpp == 32)) {
    BadBmp("compressed BMP not supported");
  }

  std::vector<std::array<std::uint8_t, 3>> palette;  // RGB
  bool gray_palette = true;
  if (bpp == 8) {
    if (palette_size == 0) palette_size = 256;
    const std::size_t at = 14 + dib_size;
    if (palette_size > 256 || at + 4 * palette_size > b.size()) BadBmp("bad palette");
    for (std::uint32_t i = 0; i < palette_size; ++i) {
      const std::array<std::uint8_t, 3> rgb = {b[at + 4 * i + 2], b[at + 4 * i + 1],
                                               b[at + 4 * i]};
      gray_palette = gray_palette && rgb[0] == rgb[1] && rgb[1] == rgb[2];
      palette.push_back(rgb);
    }
  }

  const std::size_t stride = ((static_cast<std::size_t>(width) * bpp + 31) / 32) * 4;
  if (pixel_offset + stride * height > b.size()) BadBmp("truncated pixel data");

  Raster r{width, height, (bpp == 8 && gray_palette) ? 1 : 3, 8, {}};
  r.samples.resize(static_cast<std::size_t>(width) * height * r.channels);
  for (int y = 0; y < height; ++y) {
    const int src_row = top_down ? y : height - 1 - y;
    const std::uint8_t* src = b.data() + pixel_offset + src_row * stride;
    std::uint16_t* dst = r.samples.data() + static_cast<std::size_t>(y) * width * r.channels;
    for (int x = 0; x < width; ++x) {
      if (bpp == 8) {
        const std::uint8_t index = src[x];
        if (index >= palette.size()) BadBmp("palette index out of range");
        if (r.channels == 1) {
          dst[x] = palette[index][0];
        } else {
          for (int c = 0; c < 3; ++c) dst[3 * x + c] = palette[index][c];
        }
      } else {
        const std::uint8_t* px = src + x * (bpp / 8);
        dst[3 * x] = px[2];
        dst[3 * x + 1] = px[1];
        dst[3 * x + 2] = px[0];
      }
    }
  }
  return r;
}

Raster DecodeImage(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= kPngSignature.size() &&
      std::equal(kPngSignature.begin(), kPngSignature.end(), bytes.begin())) {
    return DecodePng(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') {
    return DecodeBmp(bytes);
  }
  throw Error(ErrorCode::kInvalidImage, "unrecognized image format");
}

Raster DecodeImage(const std::filesystem::path& path) {
  const std::vector<std::uint8_t> bytes = ReadFile(path);
  try {
    return DecodeImage(std::span<const std::uint8_t>(bytes));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void WritePng(const std::filesystem::path& path, const Raster& raster) {
  if ((raster.channels != 1 && raster.channels != 3) ||
      (raster.bit_depth != 8 && raster.bit_depth != 16) || raster.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported raster for PNG");
  }
  std::vector<std::uint8_t> encoded;
  if (!EncodePngInto(raster, &encoded)) {
    throw Error(ErrorCode::kIoError, "PNG encoding failed");
  }
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(encoded.data()),
            static_cast<std::streamsize>(encoded.size()));
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

void WriteBmp(const std::filesystem::path& path, const Raster& raster) {
  if ((raster.channels != 1 && raster.channels != 3) || raster.bit_depth != 8 ||
      raster.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported raster for BMP");
  }
  const int bpp = raster.channels == 1 ? 8 : 24;
  const std::uint32_t palette_bytes = bpp == 8 ? 256 * 4 : 0;
  const std::size_t stride = ((static_cast<std::size_t>(raster.width) * bpp + 31) / 32) * 4;
  const std::uint32_t offset = 14 + 40 + palette_bytes;
  std::vector<std::uint8_t> out;
  out.reserve(offset + stride * raster.height);
  out.push_back('B');
  out.push_back('M');
  PutLe32(out, static_cast<std::uint32_t>(offset + stride * raster.height));
  PutLe32(out, 0);
  PutLe32(out, offset);
  PutLe32(out, 40);
  PutLe32(out, static_cast<std::uint32_t>(raster.width));
  PutLe32(out, static_cast<std::uint32_t>(raster.height));
  PutLe16(out, 1);
  PutLe16(out, static_cast<std::uint16_t>(bpp));
  PutLe32(out, 0);
  PutLe32(out, static_cast<std::uint32_t>(stride * raster.height));
  PutLe32(out, 2835);
  PutLe32(out, 2835);
  PutLe32(out, bpp == 8 ? 256 : 0);
  PutLe32(out, 0);
  if (bpp == 8) {
    for (int i = 0; i < 256; ++i) {
      const auto v = static_cast<std::uint8_t>(i);
      out.insert(out.end(), {v, v, v, 0});
    }
  }
  for (int y = raster.height - 1; y >= 0; --y) {
    const std::size_t row_start = out.size();
    for (int x = 0; x < raster.width; ++x) {
      if (bpp == 8) {
        out.push_back(static_cast<std::uint8_t>(raster.sample(x, y, 0)));
      } else {
        for (int c = 2; c >= 0; --c) {
          out.push_back(static_cast<std::uint8_t>(raster.sample(x, y, c)));
        }
      }
    }
    out.resize(row_start + stride, 0);
  }
  std::ofstream file(path, std::ios::binary);
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

}  // namespace iqa
