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

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sykq {

using u64 = std::uint64_t;

inline int popcount(u64 x) { return std::popcount(x); }
inline int parity(u64 x) { return std::popcount(x) & 1; }

inline bool is_pow2(u64 x) { return x != 0 && (x & (x - 1)) == 0; }

// floor(log2(x)) for x >= 1.
inline int ilog2(u64 x) {
  if (x == 0) throw std::invalid_argument("ilog2(0)");
  return 63 - std::countl_zero(x);
}

// Number of bits needed to index x values (at least 1).
inline int index_bits(u64 x) {
  if (x <= 2) return 1;
  return ilog2(std::bit_ceil(x));
}

inline u64 binomial(u64 n, u64 k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  u64 r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Spreads the bits of `compact` into the positions not listed in `sorted_holes`
// (ascending). Used to enumerate amplitudes with fixed bits at gate qubits.
inline u64 deposit_zeros(u64 compact, const std::vector<int>& sorted_holes) {
  for (int h : sorted_holes) {
    u64 low = compact & ((u64{1} << h) - 1);
    compact = ((compact >> h) << (h + 1)) | low;
  }
  return compact;
}

// Calls fn(x) for every submask x of `mask`, in increasing order.
template <class F>
inline void for_each_submask(u64 mask, F&& fn) {
  u64 x = 0;
  do {
    fn(x);
    x = (x - mask) & mask;
  } while (x != 0);
}

inline u64 mask_of_qubits(const std::vector<int>& qs) {
  u64 m = 0;
  for (int q : qs) m |= u64{1} << q;
  return m;
}

inline std::string bit_string(u64 x, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1) s[n - 1 - i] = '1';
  return s;
}

}  // namespace sykq
