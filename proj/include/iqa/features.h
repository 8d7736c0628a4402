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

// Local (3x3, symmetric-border) contrast and gradient features, and the two
// pointwise reference/test difference maps built from them.

#ifndef IQA_FEATURES_H_
#define IQA_FEATURES_H_

#include "iqa/field.h"
#include "iqa/saliency.h"

namespace iqa {

// Population standard deviation of each 3x3 neighbourhood. In [0, 0.5] for
// unit-range input.
ScalarField2D RmsContrast(const ScalarField2D& image);

struct Gradients {
  ScalarField2D x;
  ScalarField2D y;
};

// Scharr kernels (3, 10, 3) divided by 16, so each partial lies in [-1, 1]
// for unit-range input. x responds to change along columns, y along rows;
// both are positive for intensity increasing with the coordinate.
Gradients ScharrGradients(const ScalarField2D& image);

ScalarField2D GradientMagnitude(const ScalarField2D& gx, const ScalarField2D& gy);
// atan2(gy, gx) in [-pi, pi]; exactly 0 where gx == gy == 0.
ScalarField2D GradientOrientation(const ScalarField2D& gx, const ScalarField2D& gy);

// ((v_ref - v_test) / 2)^2, in [0, 0.0625].
ScalarField2D ContrastDifference(const ScalarField2D& v_ref, const ScalarField2D& v_test);

// [max(|dM| / sqrt(2), |dTheta| / (2 pi)) / 2]^2, in [0, 0.25]. The
// orientation difference is the plain absolute difference, not wrapped.
ScalarField2D GradientDifference(const ScalarField2D& mag_ref,
                                 const ScalarField2D& mag_test,
                                 const ScalarField2D& ori_ref,
                                 const ScalarField2D& ori_test);

struct FeatureBundle {
  SaliencyMap saliency;
  ScalarField2D grad_x;
  ScalarField2D grad_y;
  ScalarField2D grad_mag;
  ScalarField2D grad_ori;
  ScalarField2D rms_contrast;
};

FeatureBundle ExtractFeatures(const ScalarField2D& image, SaliencyMethod method);

}  // namespace iqa

#endif  // IQA_FEATURES_H_
