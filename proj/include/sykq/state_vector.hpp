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
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sykq/bits.hpp"
#include "sykq/gate.hpp"
#include "sykq/pauli_string.hpp"
#include "sykq/rng.hpp"

namespace sykq {

// Amplitude index bit q is qubit q (qubit 0 is the least significant bit).
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 0 || n_qubits > 30) throw std::invalid_argument("StateVector: unsupported width");
    amps_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
    amps_[0] = 1.0;
  }
  StateVector(int n_qubits, std::vector<cplx> amps) : n_(n_qubits), amps_(std::move(amps)) {
    if (amps_.size() != (std::size_t{1} << n_qubits))
      throw std::invalid_argument("StateVector: length must be 2^n_qubits");
  }

  static StateVector basis(int n_qubits, u64 index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) throw std::out_of_range("StateVector::basis: index out of range");
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
  }

  // Haar-like random state from normalized complex Gaussian amplitudes.
  static StateVector random(int n_qubits, Rng& rng) {
    StateVector s(n_qubits);
    for (auto& a : s.amps_) a = cplx(rng.normal(), rng.normal());
    s.normalize();
    return s;
  }

  int n_qubits() const { return n_; }
  std::size_t dim() const { return amps_.size(); }
  std::vector<cplx>& amplitudes() { return amps_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  cplx& operator[](std::size_t i) { return amps_[i]; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }
  void normalize() {
    double n = norm();
    if (n == 0.0) throw std::invalid_argument("StateVector::normalize: zero vector");
    for (auto& a : amps_) a /= n;
  }

 private:
  int n_ = 0;
  std::vector<cplx> amps_;
};

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: width mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: width mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

namespace detail {

inline void check_normalized(double norm, const char* where) {
  if (std::abs(norm - 1.0) > 1e-6)
    throw std::invalid_argument(std::string(where) + ": input state is not normalized");
}

struct GateFrame {
  u64 free = 0;  // qubits the gate does not touch
  u64 ctrl_bits = 0;
};

inline GateFrame frame_of(const Gate& g, int n_qubits) {
  GateFrame f;
  u64 fixed = 0;
  for (int t : g.targets) fixed |= u64{1} << t;
  for (const auto& c : g.controls) {
    fixed |= u64{1} << c.qubit;
    if (c.value) f.ctrl_bits |= u64{1} << c.qubit;
  }
  f.free = ((n_qubits == 64 ? ~u64{0} : (u64{1} << n_qubits) - 1)) & ~fixed;
  return f;
}

}  // namespace detail

// Kernel without validation. `a` holds 2^n_qubits amplitudes.
inline void apply_gate_raw(cplx* a, int n_qubits, const Gate& g) {
  const detail::GateFrame f = detail::frame_of(g, n_qubits);
  if (g.kind == GateKind::Givens) {
    const u64 ma = u64{1} << g.targets[0], mb = u64{1} << g.targets[1];
    const double c = std::cos(g.angle), s = std::sin(g.angle);
    for_each_submask(f.free, [&](u64 k) {
      const u64 base = k | f.ctrl_bits;
      cplx& x10 = a[base | ma];
      cplx& x01 = a[base | mb];
      const cplx u = x10, v = x01;
      x10 = c * u - s * v;
      x01 = s * u + c * v;
    });
    return;
  }
  const u64 m = u64{1} << g.targets[0];
  auto each = [&](auto&& fn) {
    for_each_submask(f.free, [&](u64 k) {
      const u64 base = k | f.ctrl_bits;
      fn(a[base], a[base | m]);
    });
  };
  constexpr double r2 = std::numbers::sqrt2 / 2.0;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
      each([](cplx& x0, cplx& x1) { std::swap(x0, x1); });
      break;
    case GateKind::Y:
      each([](cplx& x0, cplx& x1) {
        const cplx u = x0;
        x0 = cplx(0, -1) * x1;
        x1 = cplx(0, 1) * u;
      });
      break;
    case GateKind::Z:
    case GateKind::CZ:
      each([](cplx&, cplx& x1) { x1 = -x1; });
      break;
    case GateKind::S:
      each([](cplx&, cplx& x1) { x1 *= cplx(0, 1); });
      break;
    case GateKind::Sdg:
      each([](cplx&, cplx& x1) { x1 *= cplx(0, -1); });
      break;
    case GateKind::T:
      each([&](cplx&, cplx& x1) { x1 *= cplx(r2, r2); });
      break;
    case GateKind::Tdg:
      each([&](cplx&, cplx& x1) { x1 *= cplx(r2, -r2); });
      break;
    case GateKind::H:
      each([&](cplx& x0, cplx& x1) {
        const cplx u = x0, v = x1;
        x0 = r2 * (u + v);
        x1 = r2 * (u - v);
      });
      break;
    case GateKind::Ry: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      each([&](cplx& x0, cplx& x1) {
        const cplx u = x0, v = x1;
        x0 = c * u - s * v;
        x1 = s * u + c * v;
      });
      break;
    }
    case GateKind::Givens:
      break;
  }
}

inline void apply_gate(StateVector& s, const Gate& g) {
  validate(g, s.n_qubits());
  detail::check_normalized(s.norm(), "apply_gate");
  apply_gate_raw(s.amplitudes().data(), s.n_qubits(), g);
}

inline void run_circuit(StateVector& s, const Circuit& c) {
  if (c.n_qubits != s.n_qubits()) throw std::invalid_argument("run_circuit: register width mismatch");
  detail::check_normalized(s.norm(), "run_circuit");
  for (const Gate& g : c.gates) apply_gate_raw(s.amplitudes().data(), s.n_qubits(), g);
}

inline void apply_pauli_string(StateVector& s, const PauliString& p) {
  if (p.n_qubits() != s.n_qubits()) throw std::invalid_argument("apply_pauli_string: width mismatch");
  p.apply(s.amplitudes());
}

// A single computational basis state with an amplitude. Permutation and
// phase gates map it to another such term, which lets circuits on many
// qubits be checked column by column without a dense state.
struct BasisTerm {
  u64 index = 0;
  cplx amp = 1.0;
};

inline void apply_gate(BasisTerm& b, const Gate& g) {
  for (const auto& c : g.controls)
    if (((b.index >> c.qubit) & 1) != static_cast<u64>(c.value)) return;
  if (g.kind == GateKind::Givens || g.kind == GateKind::H || g.kind == GateKind::Ry)
    throw std::invalid_argument(std::string("BasisTerm: gate ") + gate_name(g.kind) + " is not monomial");
  const u64 m = u64{1} << g.targets[0];
  const bool one = (b.index & m) != 0;
  constexpr double r2 = std::numbers::sqrt2 / 2.0;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli: b.index ^= m; break;
    case GateKind::Y:
      b.amp *= one ? cplx(0, -1) : cplx(0, 1);
      b.index ^= m;
      break;
    case GateKind::Z:
    case GateKind::CZ:
      if (one) b.amp = -b.amp;
      break;
    case GateKind::S:
      if (one) b.amp *= cplx(0, 1);
      break;
    case GateKind::Sdg:
      if (one) b.amp *= cplx(0, -1);
      break;
    case GateKind::T:
      if (one) b.amp *= cplx(r2, r2);
      break;
    case GateKind::Tdg:
      if (one) b.amp *= cplx(r2, -r2);
      break;
    default: break;
  }
}

inline void run_circuit(BasisTerm& b, const Circuit& c) {
  for (const Gate& g : c.gates) apply_gate(b, g);
}

}  // namespace sykq
