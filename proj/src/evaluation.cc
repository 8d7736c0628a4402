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

#include "iqa/evaluation.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>

#include "iqa/error.h"

namespace iqa {

namespace {

double Mean(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

// Counts pairs i < j with v[i] > v[j] while merge-sorting v ascending.
std::int64_t SortCountingInversions(std::vector<double>& v) {
  std::vector<double> buffer(v.size());
  std::int64_t inversions = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inversions += static_cast<std::int64_t>(mid - i);
          buffer[k++] = v[j++];
        } else {
          buffer[k++] = v[i++];
        }
      }
      while (i < mid) buffer[k++] = v[i++];
      while (j < hi) buffer[k++] = v[j++];
    }
    v.swap(buffer);
  }
  return inversions;
}

// Sum over runs of equal adjacent values of t * (t - 1) / 2.
template <typename Equal>
std::int64_t TiedPairs(std::size_t n, Equal&& equal) {
  std::int64_t pairs = 0;
  std::size_t run = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i < n && equal(i - 1, i)) {
      ++run;
    } else {
      pairs += static_cast<std::int64_t>(run) * static_cast<std::int64_t>(run - 1) / 2;
      run = 1;
    }
  }
  return pairs;
}

// Numerically stable 1 / (1 + exp(z)).
double InverseOnePlusExp(double z) {
  if (z >= 0.0) {
    const double e = std::exp(-z);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(z));
}

double Sse(std::span<const double> x, std::span<const double> y,
           const std::array<double, 5>& beta) {
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - Logistic5(beta, x[i]);
    sse += r * r;
  }
  return sse;
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double BetaContinuedFraction(double a, double b, double x) {
  constexpr int kMaxTerms = 1000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxTerms; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

void ValidateSeries(std::span<const double> x, std::span<const double> y,
                    std::size_t min_length) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument, "series lengths differ");
  }
  if (x.size() < min_length) {
    throw Error(ErrorCode::kInvalidArgument,
                "series needs at least " + std::to_string(min_length) + " items");
  }
  auto has_nan = [](std::span<const double> s) {
    return std::any_of(s.begin(), s.end(), [](double v) { return std::isnan(v); });
  };
  if (has_nan(x) || has_nan(y)) {
    throw Error(ErrorCode::kInvalidArgument, "series contains NaN");
  }
}

double Pearson(std::span<const double> x, std::span<const double> y) {
  ValidateSeries(x, y, 2);
  const double mx = Mean(x);
  const double my = Mean(y);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error(ErrorCode::kDegenerateSeries, "constant series has no correlation");
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> FractionalRanks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() && x[order[j]] == x[order[i]]) ++j;
    // Positions i..j-1 (0-based) share rank mean(i+1 .. j).
    const double rank = 0.5 * static_cast<double>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = rank;
    i = j;
  }
  return ranks;
}

double Srocc(std::span<const double> x, std::span<const double> y) {
  ValidateSeries(x, y, 2);
  const std::vector<double> rx = FractionalRanks(x);
  const std::vector<double> ry = FractionalRanks(y);
  return Pearson(rx, ry);
}

double Krocc(std::span<const double> x, std::span<const double> y) {
  ValidateSeries(x, y, 2);
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return x[a] < x[b] || (x[a] == x[b] && y[a] < y[b]);
  });
  const std::int64_t total = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t x_ties =
      TiedPairs(n, [&](std::size_t i, std::size_t j) { return x[order[i]] == x[order[j]]; });
  const std::int64_t joint_ties = TiedPairs(n, [&](std::size_t i, std::size_t j) {
    return x[order[i]] == x[order[j]] && y[order[i]] == y[order[j]];
  });
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::int64_t discordant = SortCountingInversions(ys);
  const std::int64_t y_ties =
      TiedPairs(n, [&](std::size_t i, std::size_t j) { return ys[i] == ys[j]; });

  const double denom = std::sqrt(static_cast<double>(total - x_ties) *
                                 static_cast<double>(total - y_ties));
  if (denom == 0.0) {
    throw Error(ErrorCode::kDegenerateSeries, "constant series has no rank correlation");
  }
  const double numer =
      static_cast<double>(total - x_ties - y_ties + joint_ties - 2 * discordant);
  return std::clamp(numer / denom, -1.0, 1.0);
}

double Logistic5(const std::array<double, 5>& b, double x) {
  return b[0] * (0.5 - InverseOnePlusExp(b[1] * (x - b[2]))) + b[3] * x + b[4];
}

std::vector<double> LogisticFit::Map(std::span<const double> x) const {
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [&](double v) { return (*this)(v); });
  return out;
}

std::array<double, 5> DefaultLogisticStart(std::span<const double> objective,
                                           std::span<const double> subjective) {
  ValidateSeries(objective, subjective, 2);
  const auto [lo, hi] = std::minmax_element(subjective.begin(), subjective.end());
  const double mx = Mean(objective);
  double var = 0.0;
  for (double v : objective) var += (v - mx) * (v - mx);
  const double sd = std::sqrt(var / static_cast<double>(objective.size()));
  if (sd == 0.0) {
    throw Error(ErrorCode::kDegenerateSeries, "objective scores are constant");
  }
  return {*hi - *lo, 1.0 / sd, mx, 0.0, Mean(subjective)};
}

LogisticFit FitLogisticFrom(std::span<const double> x, std::span<const double> y,
                            const std::array<double, 5>& start) {
  ValidateSeries(x, y, 2);
  using Vec5 = Eigen::Matrix<double, 5, 1>;
  using Mat5 = Eigen::Matrix<double, 5, 5>;

  const double my = Mean(y);
  double spread = 0.0;
  for (double v : y) spread += (v - my) * (v - my);
  // Below this the fit is exact to rounding and further steps cannot help.
  const double exact_floor = 1e-20 * std::max(spread, 1e-300);

  LogisticFit fit;
  fit.beta = start;
  double sse = Sse(x, y, fit.beta);
  double lambda = 1e-3;
  for (int iter = 0; iter < kLogisticMaxIterations; ++iter) {
    Mat5 jtj = Mat5::Zero();
    Vec5 jtr = Vec5::Zero();
    const auto& b = fit.beta;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double s = InverseOnePlusExp(b[1] * (x[i] - b[2]));
      const double ds = b[0] * s * (1.0 - s);  // d f / d z
      Vec5 row;
      row << 0.5 - s, ds * (x[i] - b[2]), -ds * b[1], x[i], 1.0;
      const double r = y[i] - Logistic5(b, x[i]);
      jtj.noalias() += row * row.transpose();
      jtr += row * r;
    }
    const double diag_floor = 1e-12 * jtj.diagonal().maxCoeff();

    bool accepted = false;
    double trial_sse = sse;
    std::array<double, 5> trial{};
    while (lambda <= 1e16) {
      Mat5 damped = jtj;
      for (int k = 0; k < 5; ++k) {
        damped(k, k) += lambda * std::max(jtj(k, k), diag_floor);
      }
      const Vec5 step = damped.ldlt().solve(jtr);
      for (int k = 0; k < 5; ++k) trial[k] = fit.beta[k] + step[k];
      trial_sse = Sse(x, y, trial);
      if (std::isfinite(trial_sse) && trial_sse < sse) {
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) {
      fit.converged = sse <= exact_floor;
      break;
    }
    const double relative = (sse - trial_sse) / sse;
    fit.beta = trial;
    sse = trial_sse;
    lambda = std::max(lambda / 10.0, 1e-12);
    if (relative < kLogisticRelativeTolerance || sse <= exact_floor) {
      fit.converged = true;
      break;
    }
  }
  fit.residual_sse = sse;
  return fit;
}

LogisticFit FitLogistic(const ScoreSeries& series) {
  ValidateSeries(series.objective, series.subjective, 4);
  const auto& x = series.objective;
  const auto& y = series.subjective;
  const std::array<double, 5> start = DefaultLogisticStart(x, y);

  const double mx = Mean(x);
  const double my = Mean(y);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const std::array<double, 5> affine_start = {0.0, start[1], start[2], slope,
                                              my - slope * mx};

  LogisticFit a = FitLogisticFrom(x, y, start);
  LogisticFit b = FitLogisticFrom(x, y, affine_start);
  if (b.residual_sse < a.residual_sse ||
      (b.residual_sse == a.residual_sse && b.converged && !a.converged)) {
    return b;
  }
  return a;
}

ErrorMetrics ResidualErrors(std::span<const double> predicted,
                            std::span<const double> observed) {
  ValidateSeries(predicted, observed, 1);
  ErrorMetrics m;
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const double r = observed[i] - predicted[i];
    abs_sum += std::abs(r);
    sq_sum += r * r;
  }
  const auto n = static_cast<double>(predicted.size());
  m.mae = abs_sum / n;
  m.rmse = std::sqrt(sq_sum / n);
  try {
    m.plcc = Pearson(predicted, observed);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDegenerateSeries) throw;
    m.plcc = 0.0;  // a constant prediction carries no linear information
  }
  return m;
}

ErrorMetrics PlccMaeRmse(const ScoreSeries& series, const LogisticFit& fit) {
  return ResidualErrors(fit.Map(series.objective), series.subjective);
}

double RegularizedIncompleteBeta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "incomplete beta needs a, b > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * BetaContinuedFraction(a, b, x) / a;
  }
  return 1.0 - front * BetaContinuedFraction(b, a, 1.0 - x) / b;
}

double FDistributionCdf(double f, double d1, double d2) {
  if (f <= 0.0) return 0.0;
  return RegularizedIncompleteBeta(d1 / 2.0, d2 / 2.0, d1 * f / (d1 * f + d2));
}

double FDistributionQuantile(double p, double d1, double d2) {
  if (!(p > 0.0 && p < 1.0) || !(d1 > 0.0) || !(d2 > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid F quantile arguments");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (FDistributionCdf(hi, d1, d2) < p) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) break;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (FDistributionCdf(mid, d1, d2) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double SampleVariance(std::span<const double> x) {
  if (x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "variance needs at least 2 items");
  }
  const double m = Mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return ss / static_cast<double>(x.size() - 1);
}

int FTest(std::span<const double> residuals_a, std::span<const double> residuals_b,
          double confidence) {
  ValidateSeries(residuals_a, residuals_b, 3);
  const double var_a = SampleVariance(residuals_a);
  const double var_b = SampleVariance(residuals_b);
  if (var_a == var_b) return 0;  // includes both zero
  const double dof = static_cast<double>(residuals_a.size() - 1);
  const double critical = FDistributionQuantile(confidence, dof, dof);
  const double larger = std::max(var_a, var_b);
  const double smaller = std::min(var_a, var_b);
  const double ratio = smaller == 0.0 ? std::numeric_limits<double>::infinity()
                                      : larger / smaller;
  if (!(ratio > critical)) return 0;
  return var_a < var_b ? 1 : -1;
}

std::vector<std::vector<int>> FTestMatrix(
    const std::vector<std::vector<double>>& residuals, double confidence) {
  const std::size_t m = residuals.size();
  std::vector<std::vector<int>> verdicts(m, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) verdicts[i][j] = FTest(residuals[i], residuals[j], confidence);
    }
  }
  return verdicts;
}

SeriesEvaluation EvaluateSeries(const ScoreSeries& series) {
  ValidateSeries(series.objective, series.subjective, kMinGroupSize);
  SeriesEvaluation e;
  e.srocc_signed = Srocc(series.objective, series.subjective);
  e.krocc_signed = Krocc(series.objective, series.subjective);
  e.fit = FitLogistic(series);
  e.mapped = e.fit.Map(series.objective);
  const ErrorMetrics errors = ResidualErrors(e.mapped, series.subjective);
  e.plcc_signed = errors.plcc;
  e.residuals.resize(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    e.residuals[i] = series.subjective[i] - e.mapped[i];
  }
  e.row.srocc = std::abs(e.srocc_signed);
  e.row.krocc = std::abs(e.krocc_signed);
  e.row.plcc = std::abs(e.plcc_signed);
  e.row.mae = errors.mae;
  e.row.rmse = errors.rmse;
  e.row.n = series.size();
  return e;
}

Averages Aggregate(std::span<const MetricRow> rows) {
  if (rows.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "nothing to aggregate");
  }
  Averages avg;
  double total = 0.0;
  for (const MetricRow& r : rows) {
    avg.direct.srocc += r.srocc;
    avg.direct.krocc += r.krocc;
    avg.direct.plcc += r.plcc;
    const auto w = static_cast<double>(r.n);
    avg.weighted.srocc += w * r.srocc;
    avg.weighted.krocc += w * r.krocc;
    avg.weighted.plcc += w * r.plcc;
    total += w;
    avg.direct.n += r.n;
  }
  if (total == 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "aggregate weights sum to zero");
  }
  const auto count = static_cast<double>(rows.size());
  avg.direct.srocc /= count;
  avg.direct.krocc /= count;
  avg.direct.plcc /= count;
  avg.weighted.srocc /= total;
  avg.weighted.krocc /= total;
  avg.weighted.plcc /= total;
  avg.weighted.n = avg.direct.n;
  return avg;
}

std::vector<DistortionRow> GroupByDistortion(std::span<const QualityRecord> records) {
  std::map<std::string, std::vector<const QualityRecord*>> groups;
  for (const QualityRecord& r : records) {
    if (!r.subjective) {
      throw Error(ErrorCode::kInvalidArgument, "record without subjective score");
    }
    groups[r.distortion_label.value_or("")].push_back(&r);
  }
  std::vector<DistortionRow> rows;
  for (const auto& [label, members] : groups) {
    DistortionRow row{label, members.size(), std::nullopt};
    if (members.size() >= kMinGroupSize) {
      std::vector<double> q;
      std::vector<double> s;
      for (const QualityRecord* r : members) {
        q.push_back(r->q);
        s.push_back(*r->subjective);
      }
      try {
        row.srocc = std::abs(Srocc(q, s));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateSeries) throw;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace iqa
