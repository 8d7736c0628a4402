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

#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "iqa/image.h"
#include "test_support.h"

namespace iqa {
namespace {

using std::numbers::pi;
using std::numbers::sqrt2;

double NaiveStd(const ScalarField2D& f, int x, int y) {
  double v[9];
  int k = 0;
  double mean = 0;
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i <= 1; ++i) {
      v[k] = f.at(MirrorIndex(x + i, f.width()), MirrorIndex(y + j, f.height()));
      mean += v[k++];
    }
  }
  mean /= 9;
  double ss = 0;
  for (double s : v) ss += (s - mean) * (s - mean);
  return std::sqrt(ss / 9);
}

double NaiveConvolve(const ScalarField2D& f, int x, int y, const double (&k)[3][3]) {
  double sum = 0;
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i <= 1; ++i) {
      sum += k[j + 1][i + 1] *
             f.at(MirrorIndex(x + i, f.width()), MirrorIndex(y + j, f.height()));
    }
  }
  return sum / 16.0;
}

TEST(RmsContrastTest, ConstantIsZero) {
  const ScalarField2D c = RmsContrast(ScalarField2D(6, 5, 0.7));
  for (double v : c.values()) EXPECT_NEAR(v, 0.0, 1e-15);
}

TEST(RmsContrastTest, SingleBrightCenter) {
  ScalarField2D f(3, 3);
  f.at(1, 1) = 1.0;
  EXPECT_NEAR(RmsContrast(f).at(1, 1), std::sqrt(8.0 / 81.0), 1e-15);
  EXPECT_NEAR(RmsContrast(f).at(1, 1), 0.314270, 1e-6);
}

TEST(RmsContrastTest, CheckerboardInteriorIsUniform) {
  ScalarField2D f(10, 8);
  for (int y = 0; y < 8; ++y) {
    for (int x = 0; x < 10; ++x) f.at(x, y) = (x + y) % 2;
  }
  const ScalarField2D c = RmsContrast(f);
  for (int y = 1; y < 7; ++y) {
    for (int x = 1; x < 9; ++x) EXPECT_DOUBLE_EQ(c.at(x, y), c.at(1, 1));
  }
}

TEST(ScharrTest, ConstantHasNoGradient) {
  const Gradients g = ScharrGradients(ScalarField2D(5, 5, 0.2));
  EXPECT_EQ(g.x.Max(), 0.0);
  EXPECT_EQ(g.x.Min(), 0.0);
  EXPECT_EQ(g.y.Max(), 0.0);
  EXPECT_EQ(g.y.Min(), 0.0);
}

TEST(ScharrTest, HorizontalRamp) {
  const double s = 0.05;
  ScalarField2D f(12, 6);
  for (int y = 0; y < 6; ++y) {
    for (int x = 0; x < 12; ++x) f.at(x, y) = x * s;
  }
  const Gradients g = ScharrGradients(f);
  for (int y = 0; y < 6; ++y) {
    for (int x = 1; x < 11; ++x) {
      EXPECT_NEAR(g.x.at(x, y), 2 * s, 1e-15);
      EXPECT_NEAR(g.y.at(x, y), 0.0, 1e-15);
    }
  }
}

TEST(ScharrTest, TransposeSwapsComponents) {
  std::mt19937_64 rng(41);
  const ScalarField2D f = testing::RandomField(7, 9, rng);
  ScalarField2D t(9, 7);
  for (int y = 0; y < 9; ++y) {
    for (int x = 0; x < 7; ++x) t.at(y, x) = f.at(x, y);
  }
  const Gradients gf = ScharrGradients(f);
  const Gradients gt = ScharrGradients(t);
  for (int y = 0; y < 9; ++y) {
    for (int x = 0; x < 7; ++x) {
      EXPECT_NEAR(gt.y.at(y, x), gf.x.at(x, y), 1e-15);
      EXPECT_NEAR(gt.x.at(y, x), gf.y.at(x, y), 1e-15);
    }
  }
}

TEST(FeatureOracleTest, MatchesNaiveLoops) {
  const double kx[3][3] = {{-3, 0, 3}, {-10, 0, 10}, {-3, 0, 3}};
  const double ky[3][3] = {{-3, -10, -3}, {0, 0, 0}, {3, 10, 3}};
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const ScalarField2D f = testing::RandomField(8, 8, rng);
    const ScalarField2D c = RmsContrast(f);
    const Gradients g = ScharrGradients(f);
    for (int y = 0; y < 8; ++y) {
      for (int x = 0; x < 8; ++x) {
        EXPECT_NEAR(c.at(x, y), NaiveStd(f, x, y), 1e-12);
        EXPECT_NEAR(g.x.at(x, y), NaiveConvolve(f, x, y, kx), 1e-12);
        EXPECT_NEAR(g.y.at(x, y), NaiveConvolve(f, x, y, ky), 1e-12);
      }
    }
  }
}

TEST(MagnitudeOrientationTest, AxisAndDiagonalCases) {
  const ScalarField2D gx(4, 1, {1.0, 0.0, 1.0, 0.0});
  const ScalarField2D gy(4, 1, {0.0, -1.0, 1.0, 0.0});
  const ScalarField2D m = GradientMagnitude(gx, gy);
  const ScalarField2D o = GradientOrientation(gx, gy);
  EXPECT_DOUBLE_EQ(m[0], 1.0);
  EXPECT_DOUBLE_EQ(o[0], 0.0);
  EXPECT_DOUBLE_EQ(m[1], 1.0);
  EXPECT_DOUBLE_EQ(o[1], -pi / 2);
  EXPECT_DOUBLE_EQ(m[2], sqrt2);
  EXPECT_DOUBLE_EQ(o[2], pi / 4);
  EXPECT_EQ(m[3], 0.0);
  EXPECT_EQ(o[3], 0.0);
}

TEST(MagnitudeOrientationTest, SignedZerosGiveZeroOrientation) {
  const ScalarField2D gx(2, 1, {-0.0, -0.0});
  const ScalarField2D gy(2, 1, {0.0, -0.0});
  const ScalarField2D o = GradientOrientation(gx, gy);
  EXPECT_EQ(o[0], 0.0);
  EXPECT_EQ(o[1], 0.0);
}

TEST(ContrastDifferenceTest, Examples) {
  const ScalarField2D a(3, 1, {0.5, 0.2, 0.0});
  const ScalarField2D b(3, 1, {0.0, 0.2, 0.5});
  const ScalarField2D d = ContrastDifference(a, b);
  EXPECT_DOUBLE_EQ(d[0], 0.0625);
  EXPECT_EQ(d[1], 0.0);
  EXPECT_EQ(d, ContrastDifference(b, a));
}

TEST(GradientDifferenceTest, Bounds) {
  const ScalarField2D zero(2, 1, 0.0);
  const ScalarField2D mag_a(2, 1, {sqrt2, 0.0});
  const ScalarField2D ori_a(2, 1, {0.0, pi});
  const ScalarField2D ori_b(2, 1, {0.0, -pi});
  const ScalarField2D d = GradientDifference(mag_a, zero, ori_a, ori_b);
  EXPECT_DOUBLE_EQ(d[0], 0.25);
  EXPECT_DOUBLE_EQ(d[1], 0.25);
  const ScalarField2D same = GradientDifference(mag_a, mag_a, ori_a, ori_a);
  EXPECT_EQ(same.Max(), 0.0);
}

TEST(FeatureBoundsTest, FuzzedInputs) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    ScalarField2D a = testing::RandomField(12, 10, rng);
    ScalarField2D b = testing::RandomField(12, 10, rng);
    // Push some samples to the extremes.
    for (std::size_t i = 0; i < a.size(); i += 3) a[i] = std::round(a[i]);
    const FeatureBundle fa = ExtractFeatures(a, SaliencyMethod::kPhaseSpectrum);
    const FeatureBundle fb = ExtractFeatures(b, SaliencyMethod::kPhaseSpectrum);
    EXPECT_GE(fa.rms_contrast.Min(), 0.0);
    EXPECT_LE(fa.rms_contrast.Max(), 0.5);
    EXPECT_GE(fa.grad_x.Min(), -1.0);
    EXPECT_LE(fa.grad_x.Max(), 1.0);
    EXPECT_GE(fa.grad_y.Min(), -1.0);
    EXPECT_LE(fa.grad_y.Max(), 1.0);
    EXPECT_LE(fa.grad_mag.Max(), sqrt2);
    EXPECT_GE(fa.grad_ori.Min(), -pi);
    EXPECT_LE(fa.grad_ori.Max(), pi);
    for (std::size_t i = 0; i < fa.grad_mag.size(); ++i) {
      EXPECT_NEAR(fa.grad_mag[i], std::hypot(fa.grad_x[i], fa.grad_y[i]), 1e-12);
    }
    const ScalarField2D lc = ContrastDifference(fa.rms_contrast, fb.rms_contrast);
    const ScalarField2D gd =
        GradientDifference(fa.grad_mag, fb.grad_mag, fa.grad_ori, fb.grad_ori);
    EXPECT_GE(lc.Min(), 0.0);
    EXPECT_LE(lc.Max(), 0.0625);
    EXPECT_GE(gd.Min(), 0.0);
    EXPECT_LE(gd.Max(), 0.25);
    EXPECT_EQ(gd, GradientDifference(fb.grad_mag, fa.grad_mag, fb.grad_ori, fa.grad_ori));
    EXPECT_EQ(lc, ContrastDifference(fb.rms_contrast, fa.rms_contrast));
  }
}

TEST(ExtractFeaturesTest, SharesDimensions) {
  std::mt19937_64 rng(44);
  const FeatureBundle f =
      ExtractFeatures(testing::RandomField(20, 9, rng), SaliencyMethod::kSpectralResidual);
  for (const ScalarField2D* g : {&f.saliency.field, &f.grad_x, &f.grad_y, &f.grad_mag,
                                 &f.grad_ori, &f.rms_contrast}) {
    EXPECT_EQ(g->width(), 20);
    EXPECT_EQ(g->height(), 9);
  }
}

}  // namespace
}  // namespace iqa
