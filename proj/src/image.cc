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

#include "iqa/image.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "iqa/error.h"

namespace iqa {

namespace {

constexpr double kLumaR = 0.299;
constexpr double kLumaG = 0.587;
constexpr double kLumaB = 0.114;
constexpr int kScaleReference = 256;

}  // namespace

ScalarField2D ToGrayscale(const Raster& raster) {
  if (raster.empty() || raster.width <= 0 || raster.height <= 0) {
    throw Error(ErrorCode::kInvalidImage, "empty raster");
  }
  if (raster.bit_depth != 8 && raster.bit_depth != 16) {
    throw Error(ErrorCode::kInvalidImage,
                "unsupported bit depth " + std::to_string(raster.bit_depth));
  }
  if (raster.channels != 1 && raster.channels != 3) {
    throw Error(ErrorCode::kInvalidImage,
                "unsupported channel count " + std::to_string(raster.channels));
  }
  const std::size_t n = static_cast<std::size_t>(raster.width) * raster.height;
  if (raster.samples.size() != n * raster.channels) {
    throw Error(ErrorCode::kInvalidImage, "raster sample count mismatch");
  }
  const double scale = 1.0 / ((1 << raster.bit_depth) - 1);
  std::vector<double> out(n);
  const auto& s = raster.samples;
  if (raster.channels == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = s[i] * scale;
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (kLumaR * s[3 * i] + kLumaG * s[3 * i + 1] +
                kLumaB * s[3 * i + 2]) *
               scale;
    }
  }
  return ClampUnit(ScalarField2D(raster.width, raster.height, std::move(out)));
}

int AutoScaleFactor(int width, int height) {
  const double min_dim = std::min(width, height);
  return std::max(1, static_cast<int>(std::lround(min_dim / kScaleReference)));
}

ScalarField2D BlockDownsample(const ScalarField2D& field, int factor) {
  if (factor < 1) {
    throw Error(ErrorCode::kInvalidArgument, "scale factor must be >= 1");
  }
  if (factor == 1) return field;
  const int w = field.width() / factor;
  const int h = field.height() / factor;
  const double norm = 1.0 / (static_cast<double>(factor) * factor);
  ScalarField2D out(w, h);
  for (int oy = 0; oy < h; ++oy) {
    for (int ox = 0; ox < w; ++ox) {
      double sum = 0.0;
      for (int iy = 0; iy < factor; ++iy) {
        const auto src = field.row(oy * factor + iy);
        for (int ix = 0; ix < factor; ++ix) sum += src[ox * factor + ix];
      }
      out.at(ox, oy) = sum * norm;
    }
  }
  return out;
}

ScaledField AutoScale(const ScalarField2D& field) {
  const int factor = AutoScaleFactor(field.width(), field.height());
  return {BlockDownsample(field, factor), factor};
}

ScalarField2D PadSymmetric(const ScalarField2D& field, int margin) {
  if (margin < 1 || margin >= std::min(field.width(), field.height())) {
    throw Error(ErrorCode::kInvalidArgument,
                "padding margin " + std::to_string(margin) +
                    " out of range for " + std::to_string(field.width()) + "x" +
                    std::to_string(field.height()) + " field");
  }
  const int w = field.width();
  const int h = field.height();
  ScalarField2D out(w + 2 * margin, h + 2 * margin);
  for (int y = 0; y < out.height(); ++y) {
    const auto src = field.row(MirrorIndex(y - margin, h));
    auto dst = out.row(y);
    for (int x = 0; x < out.width(); ++x) dst[x] = src[MirrorIndex(x - margin, w)];
  }
  return out;
}

ScalarField2D CropBorder(const ScalarField2D& field, int margin) {
  const int w = field.width() - 2 * margin;
  const int h = field.height() - 2 * margin;
  if (margin < 0 || w < 0 || h < 0) {
    throw Error(ErrorCode::kInvalidArgument, "crop margin too large");
  }
  ScalarField2D out(w, h);
  for (int y = 0; y < h; ++y) {
    const auto src = field.row(y + margin);
    std::copy_n(src.begin() + margin, w, out.row(y).begin());
  }
  return out;
}

ScalarField2D ClampUnit(ScalarField2D field) {
  for (double& v : field.values()) v = std::clamp(v, 0.0, 1.0);
  return field;
}

ImagePair PreprocessPair(const Raster& reference, const Raster& test) {
  if (reference.empty() || test.empty()) {
    throw Error(ErrorCode::kInvalidImage, "empty raster");
  }
  if (reference.width != test.width || reference.height != test.height) {
    throw Error(ErrorCode::kPairMismatch,
                "reference is " + std::to_string(reference.width) + "x" +
                    std::to_string(reference.height) + " but test is " +
                    std::to_string(test.width) + "x" +
                    std::to_string(test.height));
  }
  ScalarField2D ref = ToGrayscale(reference);
  ScalarField2D tst = ToGrayscale(test);
  const int factor = AutoScaleFactor(ref.width(), ref.height());
  ImagePair pair{ClampUnit(BlockDownsample(ref, factor)),
                 ClampUnit(BlockDownsample(tst, factor)), factor};
  if (pair.reference.width() < 3 || pair.reference.height() < 3) {
    throw Error(ErrorCode::kInvalidImage,
                "preprocessed image smaller than 3x3");
  }
  return pair;
}

ImagePair LoadPair(const std::filesystem::path& reference,
                   const std::filesystem::path& test) {
  return PreprocessPair(DecodeImage(reference), DecodeImage(test));
}

Raster RasterFromField(const ScalarField2D& field, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw Error(ErrorCode::kInvalidArgument, "bit depth must be 8 or 16");
  }
  const double max_value = (1 << bit_depth) - 1;
  Raster r{field.width(), field.height(), 1, bit_depth, {}};
  r.samples.reserve(field.size());
  for (double v : field.values()) {
    r.samples.push_back(static_cast<std::uint16_t>(
        std::lround(std::clamp(v, 0.0, 1.0) * max_value)));
  }
  return r;
}

}  // namespace iqa
