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


#include "test_support.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include <sys/wait.h>

namespace iqa::testing {

std::filesystem::path DataPath(const std::string& name) {
  return std::filesystem::path(IQA_TEST_DATA_DIR) / name;
}

std::vector<std::string> BundledImages() {
  return {"camera.png", "astronaut.png", "coffee.png",  "chelsea.bmp", "coins.png",
          "moon16.png", "brick.png",     "grass.png",   "gravel.bmp",  "rocket_rgba.png"};
}

std::filesystem::path CliPath() { return IQA_CLI_PATH; }

ScalarField2D RandomField(int width, int height, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScalarField2D f(width, height);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = u(rng);
  return f;
}

ScalarField2D AddGaussianNoise(const ScalarField2D& field, double sigma,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, sigma);
  ScalarField2D out = field;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(out[i] + n(rng), 0.0, 1.0);
  }
  return out;
}

TempDir::TempDir() {
  std::string templ = (std::filesystem::temp_directory_path() / "iqa_test_XXXXXX").string();
  if (mkdtemp(templ.data()) == nullptr) throw std::runtime_error("mkdtemp failed");
  path_ = templ;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

CommandResult RunCommand(const std::string& command) {
  CommandResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::complex<double>> NaiveDft2(const std::vector<std::complex<double>>& x,
                                            int width, int height, bool inverse) {
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<std::complex<double>> out(x.size());
  for (int v = 0; v < height; ++v) {
    for (int u = 0; u < width; ++u) {
      std::complex<double> acc = 0.0;
      for (int y = 0; y < height; ++y) {
        for (int xx = 0; xx < width; ++xx) {
          const double phase = sign * 2.0 * std::numbers::pi *
                               (static_cast<double>(u) * xx / width +
                                static_cast<double>(v) * y / height);
          acc += x[static_cast<std::size_t>(y) * width + xx] *
                 std::complex<double>(std::cos(phase), std::sin(phase));
        }
      }
      out[static_cast<std::size_t>(v) * width + u] = acc;
    }
  }
  return out;
}

namespace {

int Mirror(int i, int n) {
  if (i < 0) return -i;
  if (i > n - 1) return 2 * n - 2 - i;
  return i;
}

double Px(const std::vector<double>& f, int w, int h, int x, int y) {
  return f[static_cast<std::size_t>(Mirror(y, h)) * w + Mirror(x, w)];
}

std::vector<double> Flatten(const ScalarField2D& f) {
  return {f.values().begin(), f.values().end()};
}

double WindowCorr(const std::vector<double>& a, const std::vector<double>& b, int w,
                  int h, int x, int y) {
  double va[9], vb[9];
  int k = 0;
  for (int j = -1; j <= 1; ++j) {
    for (int i = -1; i <= 1; ++i, ++k) {
      va[k] = Px(a, w, h, x + i, y + j);
      vb[k] = Px(b, w, h, x + i, y + j);
    }
  }
  double mean_a = 0, mean_b = 0;
  for (int i = 0; i < 9; ++i) {
    mean_a += va[i] / 9.0;
    mean_b += vb[i] / 9.0;
  }
  double cov = 0, var_a = 0, var_b = 0;
  for (int i = 0; i < 9; ++i) {
    cov += (va[i] - mean_a) * (vb[i] - mean_b) / 9.0;
    var_a += (va[i] - mean_a) * (va[i] - mean_a) / 9.0;
    var_b += (vb[i] - mean_b) * (vb[i] - mean_b) / 9.0;
  }
  const bool flat_a = var_a < 1e-12;
  const bool flat_b = var_b < 1e-12;
  if (flat_a && flat_b) return 1.0;
  if (flat_a || flat_b) return 0.0;
  return std::clamp(cov / (std::sqrt(var_a) * std::sqrt(var_b)), -1.0, 1.0);
}

}  // namespace

NaiveResult NaiveScore(const ScalarField2D& ref_field, const ScalarField2D& test_field,
                       const ScalarField2D& sal_ref_field,
                       const ScalarField2D& sal_test_field) {
  const int w = ref_field.width();
  const int h = ref_field.height();
  const std::size_t n = static_cast<std::size_t>(w) * h;
  const auto ref = Flatten(ref_field);
  const auto test = Flatten(test_field);
  const auto sal_ref = Flatten(sal_ref_field);
  const auto sal_test = Flatten(sal_test_field);

  // Scharr kernels are antisymmetric; each tap pair is applied as a
  // difference so mirrored borders cancel exactly.
  const double side[3] = {3, 10, 3};
  std::vector<double> gx_r(n), gy_r(n), gx_t(n), gy_t(n), v_r(n), v_t(n);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t p = static_cast<std::size_t>(y) * w + x;
      for (int k = -1; k <= 1; ++k) {
        gx_r[p] += side[k + 1] / 16.0 * (Px(ref, w, h, x + 1, y + k) - Px(ref, w, h, x - 1, y + k));
        gy_r[p] += side[k + 1] / 16.0 * (Px(ref, w, h, x + k, y + 1) - Px(ref, w, h, x + k, y - 1));
        gx_t[p] += side[k + 1] / 16.0 * (Px(test, w, h, x + 1, y + k) - Px(test, w, h, x - 1, y + k));
        gy_t[p] += side[k + 1] / 16.0 * (Px(test, w, h, x + k, y + 1) - Px(test, w, h, x + k, y - 1));
      }
      double sum_r = 0, sum_t = 0;
      for (int j = -1; j <= 1; ++j) {
        for (int i = -1; i <= 1; ++i) {
          sum_r += Px(ref, w, h, x + i, y + j);
          sum_t += Px(test, w, h, x + i, y + j);
        }
      }
      double ss_r = 0, ss_t = 0;
      for (int j = -1; j <= 1; ++j) {
        for (int i = -1; i <= 1; ++i) {
          ss_r += std::pow(Px(ref, w, h, x + i, y + j) - sum_r / 9.0, 2);
          ss_t += std::pow(Px(test, w, h, x + i, y + j) - sum_t / 9.0, 2);
        }
      }
      v_r[p] = std::sqrt(ss_r / 9.0);
      v_t[p] = std::sqrt(ss_t / 9.0);
    }
  }

  NaiveResult res;
  res.lc_d.resize(n);
  res.g_d.resize(n);
  res.sm_c.resize(n);
  res.x_c.resize(n);
  res.y_c.resize(n);
  res.d_f.resize(n);
  double num = 0, den = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t p = static_cast<std::size_t>(y) * w + x;
      const double lc_d = std::pow((v_r[p] - v_t[p]) / 2.0, 2);
      const double m_r = std::hypot(gx_r[p], gy_r[p]);
      const double m_t = std::hypot(gx_t[p], gy_t[p]);
      const double o_r =
          (gx_r[p] == 0 && gy_r[p] == 0) ? 0.0 : std::atan2(gy_r[p], gx_r[p]);
      const double o_t =
          (gx_t[p] == 0 && gy_t[p] == 0) ? 0.0 : std::atan2(gy_t[p], gx_t[p]);
      const double g_d = std::pow(
          std::max(std::abs(m_r - m_t) / std::sqrt(2.0),
                   std::abs(o_r - o_t) / (2.0 * std::numbers::pi)) /
              2.0,
          2);
      const double sm_c = WindowCorr(sal_ref, sal_test, w, h, x, y);
      const double x_c = WindowCorr(gx_r, gx_t, w, h, x, y);
      const double y_c = WindowCorr(gy_r, gy_t, w, h, x, y);
      const double h_c = std::max(x_c, y_c);
      const double l_c = std::min(x_c, y_c);
      const double t = std::cbrt(lc_d * (1 - sm_c) / 2 * g_d);
      const double d_p =
          std::max(std::max(h_c - l_c, 1 - x_c), std::max(1 - y_c, 1 - sm_c)) / 2 * t;
      double a = 0, b = 0;
      if (sm_c > l_c) {
        a = std::sqrt(lc_d * (1 - sm_c) / 2);
        b = std::sqrt(lc_d * g_d);
      }
      const double d_f = d_p + a + b;
      const double weight = std::max(sal_ref[p], sal_test[p]);
      num += d_f * weight;
      den += weight;
      res.lc_d[p] = lc_d;
      res.g_d[p] = g_d;
      res.sm_c[p] = sm_c;
      res.x_c[p] = x_c;
      res.y_c[p] = y_c;
      res.d_f[p] = d_f;
    }
  }
  res.q = 10000.0 * num / den;
  return res;
}

double NaivePearson(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> NaiveRanks(const std::vector<double>& x) {
  std::vector<double> r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    double less = 0, equal = 0;
    for (double v : x) {
      if (v < x[i]) less += 1;
      if (v == x[i]) equal += 1;
    }
    r[i] = less + (equal + 1) / 2.0;
  }
  return r;
}

double NaiveKendallTauB(const std::vector<double>& x, const std::vector<double>& y) {
  double concordant = 0, discordant = 0, tied_x = 0, tied_y = 0, pairs = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      pairs += 1;
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0) tied_x += 1;
      if (dy == 0) tied_y += 1;
      if (dx * dy > 0) concordant += 1;
      if (dx * dy < 0) discordant += 1;
    }
  }
  return (concordant - discordant) / std::sqrt((pairs - tied_x) * (pairs - tied_y));
}

}  // namespace iqa::testing
