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

// Bottom-up saliency from the Fourier spectrum.
//
// Both methods run at a working width of 64 pixels (aspect preserved):
//   1. bilinear resize to 64 x round(64 * h / w)
//   2. forward FFT
//   3. spectral residual: amplitude <- exp(log(|F| + eps) - mean3x3(log(|F| + eps)))
//      phase spectrum:    amplitude <- 1
//      the phase of F is kept in both cases
//   4. inverse FFT, squared magnitude
//   5. Gaussian smoothing (sigma 2.5, 9x9)
//   6. bilinear resize back to the input size
// Maps are not normalized individually; see NormalizeJointly.

#ifndef IQA_SALIENCY_H_
#define IQA_SALIENCY_H_

#include <string_view>

#include "iqa/field.h"

namespace iqa {

enum class SaliencyMethod { kSpectralResidual, kPhaseSpectrum };

std::string_view SaliencyMethodName(SaliencyMethod method);  // "sr" / "pft"
// Accepts "sr" or "pft"; throws kInvalidArgument otherwise.
SaliencyMethod ParseSaliencyMethod(std::string_view name);

struct SaliencyMap {
  ScalarField2D field;
  SaliencyMethod method = SaliencyMethod::kSpectralResidual;
};

inline constexpr int kSaliencyWorkingWidth = 64;
inline constexpr double kLogAmplitudeEpsilon = 1e-10;
inline constexpr double kSaliencySmoothingSigma = 2.5;
inline constexpr int kSaliencySmoothingSize = 9;

SaliencyMap SpectralResidualSaliency(const ScalarField2D& image);
SaliencyMap PhaseSpectrumSaliency(const ScalarField2D& image);
SaliencyMap ComputeSaliency(const ScalarField2D& image, SaliencyMethod method);

// Divides both maps by the largest value found in either, so their relative
// magnitudes survive. No-op when both maps are all zero.
void NormalizeJointly(SaliencyMap& a, SaliencyMap& b);

}  // namespace iqa

#endif  // IQA_SALIENCY_H_
