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

// Raster decoding and the preprocessing chain that turns a pair of decoded
// images into unit-range grayscale fields at a common working scale.

#ifndef IQA_IMAGE_H_
#define IQA_IMAGE_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "iqa/field.h"

namespace iqa {

// Interleaved samples, 1 (gray) or 3 (RGB) channels, 8 or 16 bits each.
// Alpha is dropped by the decoders.
struct Raster {
  int width = 0;
  int height = 0;
  int channels = 0;
  int bit_depth = 8;
  std::vector<std::uint16_t> samples;

  bool empty() const { return samples.empty(); }
  std::uint16_t sample(int x, int y, int c) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
};

// Detects PNG or BMP by signature. Throws kInvalidImage on unsupported or
// corrupt data and kIoError if the file cannot be read.
Raster DecodeImage(const std::filesystem::path& path);
Raster DecodeImage(std::span<const std::uint8_t> bytes);
Raster DecodePng(std::span<const std::uint8_t> bytes);
Raster DecodeBmp(std::span<const std::uint8_t> bytes);

void WritePng(const std::filesystem::path& path, const Raster& raster);
// 8-bit only: gray rasters become palettized 8-bit BMPs, RGB becomes 24-bit.
void WriteBmp(const std::filesystem::path& path, const Raster& raster);

// Quantizes a unit-range field (values clamped) to a gray raster.
Raster RasterFromField(const ScalarField2D& field, int bit_depth = 8);

// BT.601 luma scaled to [0, 1]; gray rasters are only range-scaled.
ScalarField2D ToGrayscale(const Raster& raster);

// max(1, round(min(width, height) / 256)).
int AutoScaleFactor(int width, int height);

// factor x factor block average with factor stride; trailing partial blocks
// are dropped.
ScalarField2D BlockDownsample(const ScalarField2D& field, int factor);

struct ScaledField {
  ScalarField2D field;
  int factor = 1;
};
ScaledField AutoScale(const ScalarField2D& field);

// Mirror padding without repeating the edge sample: [a b c] -> [b a b c b].
// Requires 1 <= margin < min(width, height).
ScalarField2D PadSymmetric(const ScalarField2D& field, int margin);
ScalarField2D CropBorder(const ScalarField2D& field, int margin);

// Index into [0, n) under the same mirror rule as PadSymmetric; valid for
// -n < i < 2n - 1.
inline int MirrorIndex(int i, int n) {
  if (i < 0) return -i;
  if (i >= n) return 2 * (n - 1) - i;
  return i;
}

ScalarField2D ClampUnit(ScalarField2D field);

struct ImagePair {
  ScalarField2D reference;
  ScalarField2D test;
  int scale_factor = 1;
};

// Grayscale, automatic scaling (factor chosen from the reference), clamp.
// Throws kPairMismatch when pixel dimensions differ and kInvalidImage for
// empty rasters or results smaller than 3x3.
ImagePair PreprocessPair(const Raster& reference, const Raster& test);
ImagePair LoadPair(const std::filesystem::path& reference,
                   const std::filesystem::path& test);

}  // namespace iqa

#endif  // IQA_IMAGE_H_
