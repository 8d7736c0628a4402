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

#include "iqa/filters.h"

#include <algorithm>
#include <cmath>

#include "iqa/error.h"
#include "iqa/image.h"

namespace iqa {

namespace {

struct Tap {
  int i0;
  int i1;
  double w1;
};

std::vector<Tap> BilinearTaps(int src, int dst) {
  std::vector<Tap> taps(dst);
  const double ratio = static_cast<double>(src) / dst;
  for (int d = 0; d < dst; ++d) {
    const double pos =
        std::clamp((d + 0.5) * ratio - 0.5, 0.0, static_cast<double>(src - 1));
    const int i0 = static_cast<int>(std::floor(pos));
    const int i1 = std::min(i0 + 1, src - 1);
    taps[d] = {i0, i1, pos - i0};
  }
  return taps;
}

}  // namespace

ScalarField2D ResizeBilinear(const ScalarField2D& field, int width, int height) {
  if (width <= 0 || height <= 0 || field.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid resize target");
  }
  if (width == field.width() && height == field.height()) return field;
  const auto xt = BilinearTaps(field.width(), width);
  const auto yt = BilinearTaps(field.height(), height);
  ScalarField2D out(width, height);
  for (int y = 0; y < height; ++y) {
    const auto r0 = field.row(yt[y].i0);
    const auto r1 = field.row(yt[y].i1);
    const double wy = yt[y].w1;
    auto dst = out.row(y);
    for (int x = 0; x < width; ++x) {
      const Tap& t = xt[x];
      const double top = r0[t.i0] + t.w1 * (r0[t.i1] - r0[t.i0]);
      const double bottom = r1[t.i0] + t.w1 * (r1[t.i1] - r1[t.i0]);
      dst[x] = top + wy * (bottom - top);
    }
  }
  return out;
}

ScalarField2D MeanFilter3x3(const ScalarField2D& field) {
  const ScalarField2D padded = PadSymmetric(field, 1);
  ScalarField2D out(field.width(), field.height());
  for (int y = 0; y < field.height(); ++y) {
    const auto r0 = padded.row(y);
    const auto r1 = padded.row(y + 1);
    const auto r2 = padded.row(y + 2);
    auto dst = out.row(y);
    for (int x = 0; x < field.width(); ++x) {
      dst[x] = (r0[x] + r0[x + 1] + r0[x + 2] + r1[x] + r1[x + 1] + r1[x + 2] +
                r2[x] + r2[x + 1] + r2[x + 2]) /
               9.0;
    }
  }
  return out;
}

std::vector<double> GaussianKernel(double sigma, int size) {
  if (size < 1 || size % 2 == 0 || !(sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid Gaussian kernel");
  }
  std::vector<double> k(size);
  const int half = size / 2;
  double sum = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = i - half;
    k[i] = std::exp(-d * d / (2.0 * sigma * sigma));
    sum += k[i];
  }
  for (double& v : k) v /= sum;
  return k;
}

ScalarField2D GaussianBlur(const ScalarField2D& field, double sigma, int size) {
  const std::vector<double> k = GaussianKernel(sigma, size);
  const int half = size / 2;
  const ScalarField2D padded = PadSymmetric(field, half);
  const int w = field.width();
  const int h = field.height();

  // Horizontal pass over all padded rows, then vertical.
  ScalarField2D horizontal(w, padded.height());
  for (int y = 0; y < padded.height(); ++y) {
    const auto src = padded.row(y);
    auto dst = horizontal.row(y);
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = 0; i < size; ++i) acc += k[i] * src[x + i];
      dst[x] = acc;
    }
  }
  ScalarField2D out(w, h);
  for (int y = 0; y < h; ++y) {
    auto dst = out.row(y);
    for (int i = 0; i < size; ++i) {
      const auto src = horizontal.row(y + i);
      for (int x = 0; x < w; ++x) dst[x] += k[i] * src[x];
    }
  }
  return out;
}

}  // namespace iqa
