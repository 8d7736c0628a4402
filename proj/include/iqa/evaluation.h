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

// Benchmark statistics for objective-vs-subjective score series: rank and
// linear correlations, five-parameter logistic mapping, error metrics, the
// residual-variance F-test and cross-database averaging.

#ifndef IQA_EVALUATION_H_
#define IQA_EVALUATION_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iqa/distortion.h"

namespace iqa {

struct ScoreSeries {
  std::vector<double> objective;
  std::vector<double> subjective;
  std::vector<std::string> labels;  // optional, empty or one per item

  std::size_t size() const { return objective.size(); }
};

// Throws kInvalidArgument for unequal lengths, fewer than `min_length`
// items or NaN entries.
void ValidateSeries(std::span<const double> x, std::span<const double> y,
                    std::size_t min_length);

// Signed Pearson linear correlation. Throws kDegenerateSeries when either
// series is constant.
double Pearson(std::span<const double> x, std::span<const double> y);

// 1-based ranks; tied values share the average of their positions.
std::vector<double> FractionalRanks(std::span<const double> x);

// Signed Spearman coefficient (Pearson of fractional ranks).
double Srocc(std::span<const double> x, std::span<const double> y);

// Signed Kendall tau-b, O(n log n).
double Krocc(std::span<const double> x, std::span<const double> y);

// f(x) = b1 * (1/2 - 1/(1 + exp(b2 * (x - b3)))) + b4 * x + b5
double Logistic5(const std::array<double, 5>& beta, double x);

struct LogisticFit {
  std::array<double, 5> beta{};
  bool converged = false;
  double residual_sse = 0.0;

  double operator()(double x) const { return Logistic5(beta, x); }
  std::vector<double> Map(std::span<const double> x) const;
};

inline constexpr int kLogisticMaxIterations = 2000;
inline constexpr double kLogisticRelativeTolerance = 1e-10;

// Default starting point: range(subjective), 1/std(objective),
// mean(objective), 0, mean(subjective).
std::array<double, 5> DefaultLogisticStart(std::span<const double> objective,
                                           std::span<const double> subjective);

// Levenberg-Marquardt least squares from one starting point.
LogisticFit FitLogisticFrom(std::span<const double> objective,
                            std::span<const double> subjective,
                            const std::array<double, 5>& start);

// Best of the default start and a start on the least-squares straight line
// (b1 = 0), so the result never fits worse than the affine map. Throws
// kDegenerateSeries for a constant objective series.
LogisticFit FitLogistic(const ScoreSeries& series);

struct ErrorMetrics {
  double plcc = 0.0;  // signed
  double mae = 0.0;
  double rmse = 0.0;
};

ErrorMetrics PlccMaeRmse(const ScoreSeries& series, const LogisticFit& fit);
ErrorMetrics ResidualErrors(std::span<const double> predicted,
                            std::span<const double> observed);

// Regularized incomplete beta I_x(a, b).
double RegularizedIncompleteBeta(double a, double b, double x);
double FDistributionCdf(double f, double d1, double d2);
// Inverse CDF by bisection, absolute accuracy better than 1e-8.
double FDistributionQuantile(double p, double d1, double d2);

// Sample variance (n - 1 divisor).
double SampleVariance(std::span<const double> x);

// +1 when the residual variance of a is significantly smaller than that of
// b, -1 when significantly larger, 0 otherwise. Requires equal lengths >= 3.
int FTest(std::span<const double> residuals_a, std::span<const double> residuals_b,
          double confidence = 0.95);

// m x m verdict matrix; cell (i, j) is FTest(residuals[i], residuals[j]).
std::vector<std::vector<int>> FTestMatrix(
    const std::vector<std::vector<double>>& residuals, double confidence = 0.95);

// Absolute correlations; mae/rmse absent on averaged rows.
struct MetricRow {
  double srocc = 0.0;
  double krocc = 0.0;
  double plcc = 0.0;
  std::optional<double> mae;
  std::optional<double> rmse;
  std::size_t n = 0;

  friend bool operator==(const MetricRow&, const MetricRow&) = default;
};

struct SeriesEvaluation {
  MetricRow row;
  double srocc_signed = 0.0;
  double krocc_signed = 0.0;
  double plcc_signed = 0.0;
  LogisticFit fit;
  std::vector<double> mapped;
  std::vector<double> residuals;  // subjective - mapped
};

// All five measures on one series. Needs at least 4 items.
SeriesEvaluation EvaluateSeries(const ScoreSeries& series);

struct Averages {
  MetricRow direct;
  MetricRow weighted;
};

// Direct and item-count-weighted means of SROCC, KROCC and PLCC. MAE and
// RMSE are deliberately left out since their scale depends on each
// database's subjective range.
Averages Aggregate(std::span<const MetricRow> rows);

inline constexpr std::size_t kMinGroupSize = 4;

struct DistortionRow {
  std::string label;
  std::size_t n = 0;
  std::optional<double> srocc;  // absolute; absent below kMinGroupSize items

  friend bool operator==(const DistortionRow&, const DistortionRow&) = default;
};

// Records need subjective scores and distortion labels. Rows are ordered by
// label.
std::vector<DistortionRow> GroupByDistortion(std::span<const QualityRecord> records);

}  // namespace iqa

#endif  // IQA_EVALUATION_H_
