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

// Fusion of the global (saliency) and local (contrast, gradient) distortion
// terms into a per-pixel distortion map, and saliency-weighted pooling into
// the scalar quality score Q. Q is 0 for identical images and grows with
// perceived degradation.

#ifndef IQA_DISTORTION_H_
#define IQA_DISTORTION_H_

#include <optional>
#include <string>

#include "iqa/correlation.h"
#include "iqa/features.h"
#include "iqa/field.h"
#include "iqa/image.h"
#include "iqa/saliency.h"

namespace iqa {

inline constexpr double kScoreScale = 10000.0;
inline constexpr double kDefaultPsnrCap = 100.0;

struct PrimaryMap {
  ScalarField2D d_p;
  ScalarField2D t;  // modulator
};

// t = cbrt(lc_d * (1 - sm_c) / 2 * g_d)
// d_p = max(h_c - l_c, 1 - x_c, 1 - y_c, 1 - sm_c) / 2 * t
PrimaryMap ComputePrimaryMap(const CorrelationMaps& corr, const ScalarField2D& lc_d,
                             const ScalarField2D& g_d);

struct GatedMaps {
  ScalarField2D a;
  ScalarField2D b;
};

// On pixels where sm_c > l_c (strictly):
//   a = sqrt(lc_d * (1 - sm_c) / 2),  b = sqrt(lc_d * g_d)
// and zero elsewhere.
GatedMaps ComputeGatedMaps(const CorrelationMaps& corr, const ScalarField2D& lc_d,
                           const ScalarField2D& g_d);

ScalarField2D FinalMap(const ScalarField2D& d_p, const ScalarField2D& a,
                       const ScalarField2D& b);

// k * sum(d_f * w) / sum(w) with w = max(s_ref, s_test). Throws
// kDegenerateSaliency when the weights sum to zero.
double Pool(const ScalarField2D& d_f, const ScalarField2D& s_ref,
            const ScalarField2D& s_test, double k = kScoreScale);

struct DistortionMaps {
  ScalarField2D d_p;
  ScalarField2D t;
  ScalarField2D a;
  ScalarField2D b;
  ScalarField2D d_f;
};

// Every intermediate of one scored pair.
struct PairAnalysis {
  FeatureBundle reference;  // saliency already jointly normalized
  FeatureBundle test;
  ScalarField2D lc_d;
  ScalarField2D g_d;
  CorrelationMaps correlations;
  DistortionMaps maps;
  double q = 0.0;
};

PairAnalysis AnalyzePair(const ImagePair& pair, SaliencyMethod method);

struct QualityRecord {
  double q = 0.0;
  SaliencyMethod saliency_method = SaliencyMethod::kSpectralResidual;
  std::string ref_id;
  std::string test_id;
  std::optional<double> subjective;
  std::optional<std::string> distortion_label;
  std::optional<std::string> database_label;
};

QualityRecord ScorePair(const ImagePair& pair, SaliencyMethod method);

// 10 log10(1 / MSE) for unit-range images; `cap` when MSE is zero.
double Psnr(const ImagePair& pair, double cap = kDefaultPsnrCap);

}  // namespace iqa

#endif  // IQA_DISTORTION_H_
