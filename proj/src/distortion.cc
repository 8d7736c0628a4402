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

#include "iqa/distortion.h"

#include <algorithm>
#include <cmath>

#include "iqa/error.h"

namespace iqa {

namespace {

void RequireMapShapes(const CorrelationMaps& corr, const ScalarField2D& lc_d,
                      const ScalarField2D& g_d, const char* what) {
  RequireSameShape(corr.sm_c, lc_d, what);
  RequireSameShape(corr.sm_c, g_d, what);
  RequireSameShape(corr.sm_c, corr.x_c, what);
  RequireSameShape(corr.sm_c, corr.y_c, what);
  RequireSameShape(corr.sm_c, corr.h_c, what);
  RequireSameShape(corr.sm_c, corr.l_c, what);
}

}  // namespace

PrimaryMap ComputePrimaryMap(const CorrelationMaps& corr, const ScalarField2D& lc_d,
                             const ScalarField2D& g_d) {
  RequireMapShapes(corr, lc_d, g_d, "ComputePrimaryMap");
  PrimaryMap m{ScalarField2D(lc_d.width(), lc_d.height()),
               ScalarField2D(lc_d.width(), lc_d.height())};
  for (std::size_t i = 0; i < lc_d.size(); ++i) {
    // Every factor is nonnegative, so the real cube root suffices.
    const double t = std::cbrt(lc_d[i] * ((1.0 - corr.sm_c[i]) / 2.0) * g_d[i]);
    const double spread = std::max({corr.h_c[i] - corr.l_c[i], 1.0 - corr.x_c[i],
                                    1.0 - corr.y_c[i], 1.0 - corr.sm_c[i]});
    m.t[i] = t;
    m.d_p[i] = spread / 2.0 * t;
  }
  return m;
}

GatedMaps ComputeGatedMaps(const CorrelationMaps& corr, const ScalarField2D& lc_d,
                           const ScalarField2D& g_d) {
  RequireMapShapes(corr, lc_d, g_d, "ComputeGatedMaps");
  GatedMaps m{ScalarField2D(lc_d.width(), lc_d.height()),
              ScalarField2D(lc_d.width(), lc_d.height())};
  for (std::size_t i = 0; i < lc_d.size(); ++i) {
    if (!(corr.sm_c[i] > corr.l_c[i])) continue;
    m.a[i] = std::sqrt(lc_d[i] * (1.0 - corr.sm_c[i]) / 2.0);
    m.b[i] = std::sqrt(lc_d[i] * g_d[i]);
  }
  return m;
}

ScalarField2D FinalMap(const ScalarField2D& d_p, const ScalarField2D& a,
                       const ScalarField2D& b) {
  RequireSameShape(d_p, a, "FinalMap");
  RequireSameShape(d_p, b, "FinalMap");
  ScalarField2D out(d_p.width(), d_p.height());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = d_p[i] + a[i] + b[i];
  return out;
}

double Pool(const ScalarField2D& d_f, const ScalarField2D& s_ref,
            const ScalarField2D& s_test, double k) {
  RequireSameShape(d_f, s_ref, "Pool");
  RequireSameShape(d_f, s_test, "Pool");
  double weighted = 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < d_f.size(); ++i) {
    const double w = std::max(s_ref[i], s_test[i]);
    weighted += d_f[i] * w;
    total += w;
  }
  if (!(total > 0.0)) {
    throw Error(ErrorCode::kDegenerateSaliency,
                "saliency weights sum to zero; cannot pool");
  }
  return k * weighted / total;
}

PairAnalysis AnalyzePair(const ImagePair& pair, SaliencyMethod method) {
  if (!pair.reference.SameShape(pair.test)) {
    throw Error(ErrorCode::kPairMismatch, "preprocessed pair dimensions differ");
  }
  PairAnalysis r;
  r.reference = ExtractFeatures(pair.reference, method);
  r.test = ExtractFeatures(pair.test, method);
  NormalizeJointly(r.reference.saliency, r.test.saliency);

  r.lc_d = ContrastDifference(r.reference.rms_contrast, r.test.rms_contrast);
  r.g_d = GradientDifference(r.reference.grad_mag, r.test.grad_mag,
                             r.reference.grad_ori, r.test.grad_ori);
  r.correlations = ComputeCorrelationMaps(r.reference, r.test);

  PrimaryMap primary = ComputePrimaryMap(r.correlations, r.lc_d, r.g_d);
  GatedMaps gated = ComputeGatedMaps(r.correlations, r.lc_d, r.g_d);
  r.maps.d_f = FinalMap(primary.d_p, gated.a, gated.b);
  r.maps.d_p = std::move(primary.d_p);
  r.maps.t = std::move(primary.t);
  r.maps.a = std::move(gated.a);
  r.maps.b = std::move(gated.b);
  r.q = Pool(r.maps.d_f, r.reference.saliency.field, r.test.saliency.field);
  return r;
}

QualityRecord ScorePair(const ImagePair& pair, SaliencyMethod method) {
  QualityRecord record;
  record.q = AnalyzePair(pair, method).q;
  record.saliency_method = method;
  return record;
}

double Psnr(const ImagePair& pair, double cap) {
  RequireSameShape(pair.reference, pair.test, "Psnr");
  double sse = 0.0;
  for (std::size_t i = 0; i < pair.reference.size(); ++i) {
    const double d = pair.reference[i] - pair.test[i];
    sse += d * d;
  }
  if (sse == 0.0) return cap;
  const double mse = sse / static_cast<double>(pair.reference.size());
  return std::min(cap, 10.0 * std::log10(1.0 / mse));
}

}  // namespace iqa
