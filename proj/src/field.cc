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

#include "iqa/field.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "iqa/error.h"

namespace iqa {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInvalidImage:
      return "InvalidImage";
    case ErrorCode::kPairMismatch:
      return "PairMismatch";
    case ErrorCode::kDegenerateSaliency:
      return "DegenerateSaliency";
    case ErrorCode::kDegenerateSeries:
      return "DegenerateSeries";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kIncompatibleReports:
      return "IncompatibleReports";
    case ErrorCode::kIoError:
      return "IoError";
  }
  return "Unknown";
}

ScalarField2D::ScalarField2D(int width, int height, double fill)
    : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative field dimensions");
  }
  if (!std::isfinite(fill)) {
    throw Error(ErrorCode::kInvalidArgument, "non-finite fill value");
  }
  values_.assign(static_cast<std::size_t>(width) * height, fill);
}

ScalarField2D::ScalarField2D(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  if (width < 0 || height < 0 ||
      values_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "field value count does not match " + std::to_string(width) +
                    "x" + std::to_string(height));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite field value");
    }
  }
}

double ScalarField2D::Min() const {
  return values_.empty() ? 0.0 : *std::min_element(values_.begin(), values_.end());
}

double ScalarField2D::Max() const {
  return values_.empty() ? 0.0 : *std::max_element(values_.begin(), values_.end());
}

double ScalarField2D::Mean() const {
  if (values_.empty()) return 0.0;
  return std::accumulate(values_.begin(), values_.end(), 0.0) /
         static_cast<double>(values_.size());
}

bool ScalarField2D::IsConstant() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](double v) { return v == values_.front(); });
}

void RequireSameShape(const ScalarField2D& a, const ScalarField2D& b,
                      const char* what) {
  if (!a.SameShape(b)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + ": field dimensions differ (" +
                    std::to_string(a.width()) + "x" + std::to_string(a.height()) +
                    " vs " + std::to_string(b.width()) + "x" +
                    std::to_string(b.height()) + ")");
  }
}

}  // namespace iqa
