// Copyright 2026 The sykq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace sykq {

inline double normal_cdf(double x, double mean, double stddev) {
  return 0.5 * std::erfc(-(x - mean) / (stddev * std::numbers::sqrt2));
}

// Kolmogorov-Smirnov distance between the sample and Normal(mean, stddev^2).
inline double ks_statistic_normal(std::vector<double> xs, double mean, double stddev) {
  if (xs.empty()) throw std::invalid_argument("ks_statistic_normal: empty sample");
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = normal_cdf(xs[i], mean, stddev);
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

// sqrt(<w^2>) / <|w|>; sqrt(pi/2) for a centred Gaussian, 1 for constant |w|.
inline double overhead_ratio(const std::vector<double>& w) {
  if (w.empty()) throw std::invalid_argument("overhead_ratio: empty sample");
  double s2 = 0.0, s1 = 0.0;
  for (double x : w) {
    s2 += x * x;
    s1 += std::abs(x);
  }
  const double n = static_cast<double>(w.size());
  if (s1 == 0.0) throw std::invalid_argument("overhead_ratio: all samples are zero");
  return std::sqrt(s2 / n) / (s1 / n);
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

inline double sample_variance(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size() - 1);
}

}  // namespace sykq
