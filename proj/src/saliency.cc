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

#include "iqa/saliency.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "iqa/error.h"
#include "iqa/fft.h"
#include "iqa/filters.h"

namespace iqa {

namespace {

// The 9x9 smoothing window needs at least 5 rows under symmetric padding.
constexpr int kMinWorkingHeight = kSaliencySmoothingSize / 2 + 1;

struct WorkingSize {
  int width;
  int height;
};

WorkingSize WorkingSizeFor(const ScalarField2D& image) {
  const int h = static_cast<int>(std::lround(
      static_cast<double>(kSaliencyWorkingWidth) * image.height() / image.width()));
  return {kSaliencyWorkingWidth, std::max(kMinWorkingHeight, h)};
}

void RequireUsable(const ScalarField2D& image) {
  if (image.width() < 3 || image.height() < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "saliency needs an image of at least 3x3");
  }
}

// A flat image has no spectrum beyond DC, so no location is more salient
// than any other. The uniform level is the mean of |ifft|^2 for any unit
// amplitude spectrum, i.e. what the phase-spectrum map averages to.
SaliencyMap UniformMap(const ScalarField2D& image, SaliencyMethod method) {
  const WorkingSize ws = WorkingSizeFor(image);
  const double level = 1.0 / (static_cast<double>(ws.width) * ws.height);
  return {ScalarField2D(image.width(), image.height(), level), method};
}

template <typename AmplitudeFn>
SaliencyMap SpectralSaliency(const ScalarField2D& image, SaliencyMethod method,
                             AmplitudeFn&& reshape_amplitude) {
  RequireUsable(image);
  if (image.IsConstant()) return UniformMap(image, method);

  const WorkingSize ws = WorkingSizeFor(image);
  const ScalarField2D small = ResizeBilinear(image, ws.width, ws.height);
  ComplexField2D spectrum = Fft2Forward(small);
  const ScalarField2D amplitude = reshape_amplitude(spectrum);
  for (std::size_t i = 0; i < spectrum.bins.size(); ++i) {
    spectrum.bins[i] = std::polar(amplitude[i], std::arg(spectrum.bins[i]));
  }
  const ComplexField2D recon = Fft2Inverse(spectrum);

  std::vector<double> energy(recon.bins.size());
  std::transform(recon.bins.begin(), recon.bins.end(), energy.begin(),
                 [](const std::complex<double>& v) { return std::norm(v); });
  ScalarField2D map(ws.width, ws.height, std::move(energy));
  map = GaussianBlur(map, kSaliencySmoothingSigma, kSaliencySmoothingSize);
  map = ResizeBilinear(map, image.width(), image.height());
  for (double& v : map.values()) v = std::max(v, 0.0);
  return {std::move(map), method};
}

}  // namespace

std::string_view SaliencyMethodName(SaliencyMethod method) {
  return method == SaliencyMethod::kSpectralResidual ? "sr" : "pft";
}

SaliencyMethod ParseSaliencyMethod(std::string_view name) {
  if (name == "sr") return SaliencyMethod::kSpectralResidual;
  if (name == "pft") return SaliencyMethod::kPhaseSpectrum;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown saliency method '" + std::string(name) + "'");
}

SaliencyMap SpectralResidualSaliency(const ScalarField2D& image) {
  return SpectralSaliency(
      image, SaliencyMethod::kSpectralResidual,
      [](const ComplexField2D& spectrum) {
        std::vector<double> log_amp(spectrum.bins.size());
        for (std::size_t i = 0; i < log_amp.size(); ++i) {
          log_amp[i] = std::log(std::abs(spectrum.bins[i]) + kLogAmplitudeEpsilon);
        }
        const ScalarField2D log_amplitude(spectrum.width, spectrum.height,
                                          std::move(log_amp));
        const ScalarField2D average = MeanFilter3x3(log_amplitude);
        std::vector<double> amp(log_amplitude.size());
        for (std::size_t i = 0; i < amp.size(); ++i) {
          amp[i] = std::exp(log_amplitude[i] - average[i]);
        }
        return ScalarField2D(spectrum.width, spectrum.height, std::move(amp));
      });
}

SaliencyMap PhaseSpectrumSaliency(const ScalarField2D& image) {
  return SpectralSaliency(image, SaliencyMethod::kPhaseSpectrum,
                          [](const ComplexField2D& spectrum) {
                            return ScalarField2D(spectrum.width, spectrum.height, 1.0);
                          });
}

SaliencyMap ComputeSaliency(const ScalarField2D& image, SaliencyMethod method) {
  return method == SaliencyMethod::kSpectralResidual ? SpectralResidualSaliency(image)
                                                     : PhaseSpectrumSaliency(image);
}

void NormalizeJointly(SaliencyMap& a, SaliencyMap& b) {
  RequireSameShape(a.field, b.field, "NormalizeJointly");
  const double peak = std::max(a.field.Max(), b.field.Max());
  if (!(peak > 0.0)) return;
  for (double& v : a.field.values()) v /= peak;
  for (double& v : b.field.values()) v /= peak;
}

}  // namespace iqa
