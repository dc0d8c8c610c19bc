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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sykq/bits.hpp"

namespace sykq {

using cplx = std::complex<double>;

// i^k for k taken mod 4.
inline cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// i^phase times a tensor product of single-qubit Paulis. A qubit with both
// its x and z bit set carries Y (not XZ), so a string is Hermitian exactly
// when the phase exponent is even.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n_qubits) : n_(n_qubits) { check_width(n_); }
  PauliString(int n_qubits, u64 x_mask, u64 z_mask, int phase_exp = 0)
      : n_(n_qubits), x_(x_mask), z_(z_mask), phase_(mod4(phase_exp)) {
    check_width(n_);
    u64 lim = n_ == 64 ? ~u64{0} : ((u64{1} << n_) - 1);
    if ((x_ | z_) & ~lim) throw std::invalid_argument("PauliString: mask exceeds width");
  }

  // Parses e.g. "+XIZY" or "-iZZ"; the leftmost letter is the highest qubit.
  static PauliString parse(const std::string& text) {
    std::size_t pos = 0;
    int ph = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') ph = 2;
      ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
      ph += 1;
      ++pos;
    }
    int n = static_cast<int>(text.size() - pos);
    u64 x = 0, z = 0;
    for (int k = 0; k < n; ++k) {
      int q = n - 1 - k;
      switch (text[pos + k]) {
        case 'I': case '_': break;
        case 'X': x |= u64{1} << q; break;
        case 'Z': z |= u64{1} << q; break;
        case 'Y': x |= u64{1} << q; z |= u64{1} << q; break;
        default: throw std::invalid_argument("PauliString::parse: bad character");
      }
    }
    return PauliString(n, x, z, ph);
  }

  int n_qubits() const { return n_; }
  u64 x_mask() const { return x_; }
  u64 z_mask() const { return z_; }
  int phase_exp() const { return phase_; }
  cplx phase() const { return i_pow(phase_); }

  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  bool is_hermitian() const { return (phase_ & 1) == 0; }

  // Basis action P|y> = i^k |y ^ x>; returns k mod 4.
  int basis_phase(u64 y) const { return mod4(phase_ + popcount(x_ & z_) + 2 * parity(z_ & y)); }
  u64 basis_flip(u64 y) const { return y ^ x_; }

  PauliString operator*(const PauliString& o) const {
    if (n_ != o.n_) throw std::invalid_argument("PauliString product: width mismatch");
    int q = phase_ + popcount(x_ & z_) + o.phase_ + popcount(o.x_ & o.z_) + 2 * popcount(z_ & o.x_);
    u64 x = x_ ^ o.x_, z = z_ ^ o.z_;
    return PauliString(n_, x, z, q - popcount(x & z));
  }

  PauliString adjoint() const {
    // Each factor is Hermitian, so only the scalar conjugates.
    return PauliString(n_, x_, z_, -phase_);
  }

  bool commutes_with(const PauliString& o) const {
    return parity((x_ & o.z_) ^ (z_ & o.x_)) == 0;
  }

  bool operator==(const PauliString& o) const = default;

  std::string to_string() const {
    static const char* ph[] = {"+", "+i", "-", "-i"};
    std::string s = ph[phase_];
    for (int q = n_ - 1; q >= 0; --q) {
      bool xb = (x_ >> q) & 1, zb = (z_ >> q) & 1;
      s += xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
    }
    return s;
  }

  // Applies the string in place to a 2^n amplitude array.
  template <class Vec>
  void apply(Vec& amps) const {
    if (static_cast<u64>(amps.size()) != (u64{1} << n_))
      throw std::invalid_argument("PauliString::apply: width mismatch");
    const u64 dim = u64{1} << n_;
    const int base = phase_ + popcount(x_ & z_);
    if (x_ == 0) {
      for (u64 y = 0; y < dim; ++y) amps[y] *= i_pow(base + 2 * parity(z_ & y));
      return;
    }
    // Visit each pair {y, y^x} once, from the member with the top x bit clear.
    const u64 top = u64{1} << ilog2(x_);
    for (u64 y = 0; y < dim; ++y) {
      if (y & top) continue;
      u64 y2 = y ^ x_;
      cplx a = amps[y], b = amps[y2];
      amps[y2] = i_pow(base + 2 * parity(z_ & y)) * a;
      amps[y] = i_pow(base + 2 * parity(z_ & y2)) * b;
    }
  }

 private:
  static int mod4(int k) { return ((k % 4) + 4) % 4; }
  static void check_width(int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("PauliString: width must be in [0, 64]");
  }

  int n_ = 0;
  u64 x_ = 0;
  u64 z_ = 0;
  int phase_ = 0;
};

}  // namespace sykq
