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

#ifndef IQA_FFT_H_
#define IQA_FFT_H_

#include <complex>
#include <vector>

#include "iqa/field.h"

namespace iqa {

// Row-major complex grid, same layout as ScalarField2D. Bin (0, 0) is DC.
struct ComplexField2D {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> bins;

  std::complex<double>& at(int x, int y) {
    return bins[static_cast<std::size_t>(y) * width + x];
  }
  const std::complex<double>& at(int x, int y) const {
    return bins[static_cast<std::size_t>(y) * width + x];
  }
};

// Arbitrary sizes are supported. The forward transform is unnormalized; the
// inverse carries the full 1/(width*height) factor, so Inverse(Forward(x))
// reproduces x. Safe to call from multiple threads.
ComplexField2D Fft2Forward(const ScalarField2D& field);
ComplexField2D Fft2Forward(const ComplexField2D& field);
ComplexField2D Fft2Inverse(const ComplexField2D& spectrum);
// Real part of the inverse transform.
ScalarField2D Fft2InverseReal(const ComplexField2D& spectrum);

}  // namespace iqa

#endif  // IQA_FFT_H_
