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

#include "iqa/correlation.h"

#include <algorithm>
#include <cmath>

#include "iqa/image.h"

namespace iqa {

double WindowPearson(const double (&a)[9], const double (&b)[9]) {
  double ma = 0.0;
  double mb = 0.0;
  for (int i = 0; i < 9; ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= 9.0;
  mb /= 9.0;
  double saa = 0.0;
  double sbb = 0.0;
  double sab = 0.0;
  for (int i = 0; i < 9; ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  const bool flat_a = saa / 9.0 < kFlatWindowVariance;
  const bool flat_b = sbb / 9.0 < kFlatWindowVariance;
  if (flat_a && flat_b) return 1.0;
  if (flat_a || flat_b) return 0.0;
  return std::clamp(sab / std::sqrt(saa * sbb), -1.0, 1.0);
}

ScalarField2D LocalPearson(const ScalarField2D& a, const ScalarField2D& b) {
  RequireSameShape(a, b, "LocalPearson");
  const ScalarField2D pa = PadSymmetric(a, 1);
  const ScalarField2D pb = PadSymmetric(b, 1);
  ScalarField2D out(a.width(), a.height());
  double wa[9];
  double wb[9];
  for (int y = 0; y < a.height(); ++y) {
    auto dst = out.row(y);
    for (int x = 0; x < a.width(); ++x) {
      for (int dy = 0; dy < 3; ++dy) {
        const auto ra = pa.row(y + dy);
        const auto rb = pb.row(y + dy);
        for (int dx = 0; dx < 3; ++dx) {
          wa[3 * dy + dx] = ra[x + dx];
          wb[3 * dy + dx] = rb[x + dx];
        }
      }
      dst[x] = WindowPearson(wa, wb);
    }
  }
  return out;
}

HighLow CombineHighLow(const ScalarField2D& x_c, const ScalarField2D& y_c) {
  RequireSameShape(x_c, y_c, "CombineHighLow");
  HighLow hl{ScalarField2D(x_c.width(), x_c.height()),
             ScalarField2D(x_c.width(), x_c.height())};
  for (std::size_t i = 0; i < x_c.size(); ++i) {
    hl.high[i] = std::max(x_c[i], y_c[i]);
    hl.low[i] = std::min(x_c[i], y_c[i]);
  }
  return hl;
}

CorrelationMaps ComputeCorrelationMaps(const FeatureBundle& ref,
                                       const FeatureBundle& test) {
  CorrelationMaps c;
  c.sm_c = LocalPearson(ref.saliency.field, test.saliency.field);
  c.x_c = LocalPearson(ref.grad_x, test.grad_x);
  c.y_c = LocalPearson(ref.grad_y, test.grad_y);
  HighLow hl = CombineHighLow(c.x_c, c.y_c);
  c.h_c = std::move(hl.high);
  c.l_c = std::move(hl.low);
  return c;
}

}  // namespace iqa
