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
#include <stdexcept>
#include <vector>

namespace sykq {

// J_0(x) .. J_nmax(x) by Miller's backward recurrence, normalized with
// J_0 + 2 (J_2 + J_4 + ...) = 1. Accurate to about 1e-15 absolute and keeps
// relative accuracy in the small tail n >> |x|.
inline std::vector<double> bessel_j_all(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel_j_all: order must be >= 0");
  if (!std::isfinite(x) || std::abs(x) > 1e5 || nmax > 100000)
    throw std::overflow_error("bessel_j_all: argument or order out of supported range");
  std::vector<double> out(nmax + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  const double ax = std::abs(x);
  const int top = std::max(nmax, static_cast<int>(ax)) + 40 + static_cast<int>(std::sqrt(60.0 * (ax + nmax)));
  const int start = top + (top & 1);  // even start keeps the normalization sum aligned
  std::vector<double> j(start + 2, 0.0);
  j[start + 1] = 0.0;
  j[start] = 1e-300;
  double norm = 0.0;
  for (int k = start; k >= 1; --k) {
    j[k - 1] = (2.0 * k / ax) * j[k] - j[k + 1];
    if (std::abs(j[k - 1]) > 1e250) {
      for (int m = k - 1; m <= start + 1; ++m) j[m] *= 1e-250;
      norm *= 1e-250;
    }
    if (((k - 1) % 2) == 0 && k - 1 > 0) norm += 2.0 * j[k - 1];
  }
  norm += j[0];
  for (int n = 0; n <= nmax; ++n) {
    double v = j[n] / norm;
    if (x < 0.0 && (n & 1)) v = -v;
    out[n] = v;
  }
  return out;
}

inline double bessel_j(int n, double x) { return bessel_j_all(n, x)[n]; }

}  // namespace sykq
