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

#include "iqa/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "iqa/error.h"

namespace iqa {

namespace {

// FFTW's planner is not re-entrant; fftw_execute on a private plan is.
std::mutex& PlannerMutex() {
  static std::mutex mutex;
  return mutex;
}

class FftwBuffer {
 public:
  explicit FftwBuffer(std::size_t n)
      : data_(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n))) {
    if (data_ == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data_); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;

  fftw_complex* get() { return data_; }

 private:
  fftw_complex* data_;
};

class FftwPlan {
 public:
  FftwPlan(int width, int height, fftw_complex* in, fftw_complex* out, int sign) {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    plan_ = fftw_plan_dft_2d(height, width, in, out, sign, FFTW_ESTIMATE);
  }
  ~FftwPlan() {
    std::lock_guard<std::mutex> lock(PlannerMutex());
    fftw_destroy_plan(plan_);
  }
  FftwPlan(const FftwPlan&) = delete;
  FftwPlan& operator=(const FftwPlan&) = delete;

  void Execute() { fftw_execute(plan_); }

 private:
  fftw_plan plan_;
};

ComplexField2D Transform(const ComplexField2D& input, int sign) {
  const std::size_t n = input.bins.size();
  if (input.width <= 0 || input.height <= 0 ||
      n != static_cast<std::size_t>(input.width) * input.height) {
    throw Error(ErrorCode::kInvalidArgument, "invalid FFT input dimensions");
  }
  FftwBuffer in(n);
  FftwBuffer out(n);
  FftwPlan plan(input.width, input.height, in.get(), out.get(), sign);
  for (std::size_t i = 0; i < n; ++i) {
    in.get()[i][0] = input.bins[i].real();
    in.get()[i][1] = input.bins[i].imag();
  }
  plan.Execute();
  ComplexField2D result{input.width, input.height, std::vector<std::complex<double>>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    result.bins[i] = {out.get()[i][0], out.get()[i][1]};
  }
  return result;
}

}  // namespace

ComplexField2D Fft2Forward(const ComplexField2D& field) {
  return Transform(field, FFTW_FORWARD);
}

ComplexField2D Fft2Forward(const ScalarField2D& field) {
  ComplexField2D c{field.width(), field.height(), {}};
  c.bins.assign(field.values().begin(), field.values().end());
  return Transform(c, FFTW_FORWARD);
}

ComplexField2D Fft2Inverse(const ComplexField2D& spectrum) {
  ComplexField2D result = Transform(spectrum, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(result.bins.size());
  for (auto& v : result.bins) v *= scale;
  return result;
}

ScalarField2D Fft2InverseReal(const ComplexField2D& spectrum) {
  const ComplexField2D c = Fft2Inverse(spectrum);
  std::vector<double> re(c.bins.size());
  std::transform(c.bins.begin(), c.bins.end(), re.begin(),
                 [](const std::complex<double>& v) { return v.real(); });
  return ScalarField2D(c.width, c.height, std::move(re));
}

}  // namespace iqa
