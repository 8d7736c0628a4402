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

#ifndef IQA_FILTERS_H_
#define IQA_FILTERS_H_

#include <vector>

#include "iqa/field.h"

namespace iqa {

// Bilinear resampling with pixel centers at half-integer positions; source
// coordinates are clamped to the border.
ScalarField2D ResizeBilinear(const ScalarField2D& field, int width, int height);

// 3x3 box mean, symmetric borders.
ScalarField2D MeanFilter3x3(const ScalarField2D& field);

// Normalized 1-D Gaussian taps, length `size` (odd).
std::vector<double> GaussianKernel(double sigma, int size);

// Separable Gaussian with a size x size normalized kernel, symmetric borders.
// Requires size / 2 < min(width, height).
ScalarField2D GaussianBlur(const ScalarField2D& field, double sigma, int size);

}  // namespace iqa

#endif  // IQA_FILTERS_H_
