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

#ifndef IQA_CORRELATION_H_
#define IQA_CORRELATION_H_

#include "iqa/features.h"
#include "iqa/field.h"

namespace iqa {

// Window variance below which a 3x3 window counts as flat.
inline constexpr double kFlatWindowVariance = 1e-12;

// Per-pixel Pearson coefficient between the 3x3 symmetric-border windows of
// a and b, clamped to [-1, 1]. Two flat windows correlate perfectly (1); one
// flat window against a textured one gives 0.
ScalarField2D LocalPearson(const ScalarField2D& a, const ScalarField2D& b);

// Pearson coefficient of two 9-sample windows under the same flat-window
// convention as LocalPearson.
double WindowPearson(const double (&a)[9], const double (&b)[9]);

struct HighLow {
  ScalarField2D high;
  ScalarField2D low;
};
// Pointwise max and min.
HighLow CombineHighLow(const ScalarField2D& x_c, const ScalarField2D& y_c);

struct CorrelationMaps {
  ScalarField2D sm_c;  // saliency vs saliency
  ScalarField2D x_c;   // x-gradient vs x-gradient
  ScalarField2D y_c;   // y-gradient vs y-gradient
  ScalarField2D h_c;   // max(x_c, y_c)
  ScalarField2D l_c;   // min(x_c, y_c)
};

// Saliency maps inside the bundles are used as given (normalize them jointly
// first).
CorrelationMaps ComputeCorrelationMaps(const FeatureBundle& ref,
                                       const FeatureBundle& test);

}  // namespace iqa

#endif  // IQA_CORRELATION_H_
