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

#ifndef IQA_FIELD_H_
#define IQA_FIELD_H_

#include <cstddef>
#include <span>
#include <vector>

namespace iqa {

// A width x height grid of finite reals stored row-major. Carries images,
// saliency maps, gradients, correlation maps and distortion maps alike.
class ScalarField2D {
 public:
  ScalarField2D() = default;
  ScalarField2D(int width, int height, double fill = 0.0);
  // Throws kInvalidArgument if values.size() != width * height or any value
  // is not finite.
  ScalarField2D(int width, int height, std::vector<double> values);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  double at(int x, int y) const { return values_[Index(x, y)]; }
  double& at(int x, int y) { return values_[Index(x, y)]; }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::span<const double> row(int y) const {
    return {values_.data() + Index(0, y), static_cast<std::size_t>(width_)};
  }
  std::span<double> row(int y) {
    return {values_.data() + Index(0, y), static_cast<std::size_t>(width_)};
  }

  bool SameShape(const ScalarField2D& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }
  double Min() const;
  double Max() const;
  double Mean() const;
  bool IsConstant() const;

  friend bool operator==(const ScalarField2D&, const ScalarField2D&) = default;

 private:
  std::size_t Index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

// Throws kInvalidArgument naming `what` unless a and b have equal dimensions.
void RequireSameShape(const ScalarField2D& a, const ScalarField2D& b,
                      const char* what);

}  // namespace iqa

#endif  // IQA_FIELD_H_
