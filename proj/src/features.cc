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

#include "iqa/features.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "iqa/image.h"

namespace iqa {

namespace {

constexpr double kScharrSide = 3.0 / 16.0;
constexpr double kScharrCenter = 10.0 / 16.0;

}  // namespace

ScalarField2D RmsContrast(const ScalarField2D& image) {
  const ScalarField2D padded = PadSymmetric(image, 1);
  ScalarField2D out(image.width(), image.height());
  for (int y = 0; y < image.height(); ++y) {
    const double* rows[3] = {padded.row(y).data(), padded.row(y + 1).data(),
                             padded.row(y + 2).data()};
    auto dst = out.row(y);
    for (int x = 0; x < image.width(); ++x) {
      double mean = 0.0;
      for (const double* r : rows) mean += r[x] + r[x + 1] + r[x + 2];
      mean /= 9.0;
      double ss = 0.0;
      for (const double* r : rows) {
        for (int i = 0; i < 3; ++i) {
          const double d = r[x + i] - mean;
          ss += d * d;
        }
      }
      dst[x] = std::sqrt(ss / 9.0);
    }
  }
  return out;
}

Gradients ScharrGradients(const ScalarField2D& image) {
  const ScalarField2D padded = PadSymmetric(image, 1);
  Gradients g{ScalarField2D(image.width(), image.height()),
              ScalarField2D(image.width(), image.height())};
  for (int y = 0; y < image.height(); ++y) {
    const auto up = padded.row(y);
    const auto mid = padded.row(y + 1);
    const auto down = padded.row(y + 2);
    auto gx = g.x.row(y);
    auto gy = g.y.row(y);
    for (int x = 0; x < image.width(); ++x) {
      gx[x] = kScharrSide * (up[x + 2] - up[x]) +
              kScharrCenter * (mid[x + 2] - mid[x]) +
              kScharrSide * (down[x + 2] - down[x]);
      gy[x] = kScharrSide * (down[x] - up[x]) +
              kScharrCenter * (down[x + 1] - up[x + 1]) +
              kScharrSide * (down[x + 2] - up[x + 2]);
    }
  }
  return g;
}

ScalarField2D GradientMagnitude(const ScalarField2D& gx, const ScalarField2D& gy) {
  RequireSameShape(gx, gy, "GradientMagnitude");
  ScalarField2D out(gx.width(), gx.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::sqrt(gx[i] * gx[i] + gy[i] * gy[i]);
  }
  return out;
}

ScalarField2D GradientOrientation(const ScalarField2D& gx, const ScalarField2D& gy) {
  RequireSameShape(gx, gy, "GradientOrientation");
  ScalarField2D out(gx.width(), gx.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Signed zeros would otherwise give +-pi for a flat neighbourhood.
    out[i] = (gx[i] == 0.0 && gy[i] == 0.0) ? 0.0 : std::atan2(gy[i], gx[i]);
  }
  return out;
}

ScalarField2D ContrastDifference(const ScalarField2D& v_ref, const ScalarField2D& v_test) {
  RequireSameShape(v_ref, v_test, "ContrastDifference");
  ScalarField2D out(v_ref.width(), v_ref.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double d = (v_ref[i] - v_test[i]) / 2.0;
    out[i] = d * d;
  }
  return out;
}

ScalarField2D GradientDifference(const ScalarField2D& mag_ref,
                                 const ScalarField2D& mag_test,
                                 const ScalarField2D& ori_ref,
                                 const ScalarField2D& ori_test) {
  RequireSameShape(mag_ref, mag_test, "GradientDifference");
  RequireSameShape(mag_ref, ori_ref, "GradientDifference");
  RequireSameShape(mag_ref, ori_test, "GradientDifference");
  ScalarField2D out(mag_ref.width(), mag_ref.height());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double dm = std::abs(mag_ref[i] - mag_test[i]) / std::numbers::sqrt2;
    const double dt = std::abs(ori_ref[i] - ori_test[i]) / (2.0 * std::numbers::pi);
    const double m = std::max(dm, dt) / 2.0;
    out[i] = m * m;
  }
  return out;
}

FeatureBundle ExtractFeatures(const ScalarField2D& image, SaliencyMethod method) {
  FeatureBundle f;
  f.saliency = ComputeSaliency(image, method);
  Gradients g = ScharrGradients(image);
  f.grad_mag = GradientMagnitude(g.x, g.y);
  f.grad_ori = GradientOrientation(g.x, g.y);
  f.grad_x = std::move(g.x);
  f.grad_y = std::move(g.y);
  f.rms_contrast = RmsContrast(image);
  return f;
}

}  // namespace iqa
