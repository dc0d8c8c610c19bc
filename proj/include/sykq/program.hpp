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
#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "sykq/bits.hpp"
#include "sykq/gate.hpp"
#include "sykq/state_vector.hpp"

namespace sykq {

// 2|0><0| - I on the listed qubits, identity elsewhere.
struct ZeroReflection {
  std::vector<int> qubits;
};

// Real Householder map on `count` contiguous qubits starting at `first` that
// sends |0> to sum_k alpha_k |k>. It is symmetric and orthogonal, hence its
// own inverse. With a control it acts only where the control fires.
struct HouseholderPrep {
  int first = 0;
  int count = 0;
  std::vector<double> alpha;
  std::optional<Control> control;
};

// Index-controlled product of Majorana operators on an N-qubit system block.
// slots[l] holds up to four mode indices (p, q, r, s); -1 is an identity
// factor. The forward map applies gamma_p gamma_q gamma_r gamma_s to the
// system for index value l; `adjoint` applies the reversed product.
struct MajoranaSelect {
  int index_first = 0;
  int index_count = 0;
  int system_first = 0;
  int system_count = 0;
  std::vector<std::array<int, 4>> slots;
  bool adjoint = false;
};

using Step = std::variant<Circuit, ZeroReflection, HouseholderPrep, MajoranaSelect>;

struct Program {
  int n_qubits = 0;
  std::vector<Step> steps;

  Program() = default;
  explicit Program(int n) : n_qubits(n) {}

  Program& add(Step s) {
    steps.push_back(std::move(s));
    return *this;
  }
  Program& append(const Program& p) {
    steps.insert(steps.end(), p.steps.begin(), p.steps.end());
    return *this;
  }

  bool is_circuit() const {
    for (const auto& s : steps)
      if (!std::holds_alternative<Circuit>(s)) return false;
    return true;
  }
};

inline Program adjoint(const Program& p) {
  Program r(p.n_qubits);
  for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
    std::visit(
        [&](const auto& s) {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, Circuit>) {
            r.steps.emplace_back(adjoint(s));
          } else if constexpr (std::is_same_v<S, MajoranaSelect>) {
            MajoranaSelect m = s;
            m.adjoint = !m.adjoint;
            r.steps.emplace_back(std::move(m));
          } else {
            r.steps.emplace_back(s);
          }
        },
        *it);
  }
  return r;
}

// Concatenates the gate lists; throws if any step is not a circuit.
inline Circuit flatten(const Program& p) {
  Circuit c(p.n_qubits);
  for (const auto& s : p.steps) {
    if (!std::holds_alternative<Circuit>(s)) throw std::invalid_argument("flatten: program has non-gate steps");
    c.append(std::get<Circuit>(s));
  }
  return c;
}

inline TLedger t_ledger(const Program& p) {
  TLedger total;
  for (const auto& s : p.steps) {
    if (!std::holds_alternative<Circuit>(s)) continue;
    TLedger l = t_ledger(std::get<Circuit>(s));
    total.t_count += l.t_count;
    total.t_gates += l.t_gates;
    total.and_compute += l.and_compute;
    total.and_uncompute += l.and_uncompute;
    total.toffoli += l.toffoli;
    total.clifford += l.clifford;
    total.rotations += l.rotations;
    total.other_controlled += l.other_controlled;
  }
  return total;
}

namespace detail {

inline void run_step(cplx* a, int n, const ZeroReflection& z) {
  const u64 m = mask_of_qubits(z.qubits);
  const u64 dim = u64{1} << n;
  for (u64 i = 0; i < dim; ++i)
    if (i & m) a[i] = -a[i];
}

inline void run_step(cplx* a, int n, const HouseholderPrep& h) {
  const u64 sub = u64{1} << h.count;
  if (h.alpha.size() != sub) throw std::invalid_argument("HouseholderPrep: amplitude count mismatch");
  if (h.first < 0 || h.first + h.count > n) throw std::out_of_range("HouseholderPrep: qubits out of range");
  std::vector<double> v(h.alpha.begin(), h.alpha.end());
  for (auto& x : v) x = -x;
  v[0] += 1.0;
  double vv = 0.0;
  for (double x : v) vv += x * x;
  if (vv < 1e-28) return;  // alpha == |0>
  const double scale = 2.0 / vv;
  std::vector<int> holes;
  for (int q = h.first; q < h.first + h.count; ++q) holes.push_back(q);
  u64 ctl_bits = 0;
  if (h.control) {
    if (h.control->qubit >= h.first && h.control->qubit < h.first + h.count)
      throw std::invalid_argument("HouseholderPrep: control overlaps target block");
    holes.push_back(h.control->qubit);
    std::sort(holes.begin(), holes.end());
    if (h.control->value) ctl_bits = u64{1} << h.control->qubit;
  }
  const u64 free = ((u64{1} << n) - 1) & ~mask_of_qubits(holes);
  for_each_submask(free, [&](u64 k) {
    const u64 base = k | ctl_bits;
    cplx dot = 0.0;
    for (u64 j = 0; j < sub; ++j) dot += v[j] * a[base | (j << h.first)];
    dot *= scale;
    for (u64 j = 0; j < sub; ++j) a[base | (j << h.first)] -= v[j] * dot;
  });
}

// gamma_m on the system block: |y> -> (-1)^{popcount(y & (2^m - 1))} |y ^ 2^m>.
inline void apply_majorana_block(cplx* a, u64 base, int sys_first, int m, u64 sys_dim) {
  const u64 xm = u64{1} << m;
  const u64 zm = xm - 1;
  for (u64 y = 0; y < sys_dim; ++y) {
    if (y & xm) continue;
    const u64 i0 = base | (y << sys_first), i1 = base | ((y | xm) << sys_first);
    const double sg = parity(y & zm) ? -1.0 : 1.0;
    const cplx u = a[i0];
    a[i0] = sg * a[i1];
    a[i1] = sg * u;
  }
}

inline void run_step(cplx* a, int n, const MajoranaSelect& s) {
  const u64 n_idx = u64{1} << s.index_count;
  if (s.slots.size() != n_idx) throw std::invalid_argument("MajoranaSelect: slot count mismatch");
  std::vector<int> holes;
  for (int q = 0; q < s.index_count; ++q) holes.push_back(s.index_first + q);
  for (int q = 0; q < s.system_count; ++q) holes.push_back(s.system_first + q);
  std::sort(holes.begin(), holes.end());
  const u64 free = ((u64{1} << n) - 1) & ~mask_of_qubits(holes);
  const u64 sys_dim = u64{1} << s.system_count;
  for_each_submask(free, [&](u64 rest) {
    for (u64 l = 0; l < n_idx; ++l) {
      const u64 base = rest | (l << s.index_first);
      const auto& f = s.slots[l];
      for (int j = 0; j < 4; ++j) {
        const int m = s.adjoint ? f[j] : f[3 - j];
        if (m >= 0) apply_majorana_block(a, base, s.system_first, m, sys_dim);
      }
    }
  });
}

inline void run_step(cplx* a, int n, const Circuit& c) {
  if (c.n_qubits != n) throw std::invalid_argument("Program: circuit width mismatch");
  for (const Gate& g : c.gates) apply_gate_raw(a, n, g);
}

inline void run_step(BasisTerm& b, const Circuit& c) { run_circuit(b, c); }
inline void run_step(BasisTerm& b, const ZeroReflection& z) {
  if (b.index & mask_of_qubits(z.qubits)) b.amp = -b.amp;
}
inline void run_step(BasisTerm&, const HouseholderPrep& h) {
  // Only the trivial preparation keeps basis states basis states.
  for (std::size_t j = 1; j < h.alpha.size(); ++j)
    if (h.alpha[j] != 0.0) throw std::invalid_argument("BasisTerm: HouseholderPrep is not monomial");
  if (!h.alpha.empty() && h.alpha[0] != 1.0) throw std::invalid_argument("BasisTerm: HouseholderPrep is not monomial");
}
inline void run_step(BasisTerm& b, const MajoranaSelect& s) {
  const u64 l = (b.index >> s.index_first) & ((u64{1} << s.index_count) - 1);
  const auto& f = s.slots.at(l);
  for (int j = 0; j < 4; ++j) {
    const int m = s.adjoint ? f[j] : f[3 - j];
    if (m < 0) continue;
    const u64 y = b.index >> s.system_first;
    if (parity(y & ((u64{1} << m) - 1))) b.amp = -b.amp;
    b.index ^= u64{1} << (s.system_first + m);
  }
}

}  // namespace detail

inline void run_program_raw(cplx* a, int n, const Program& p) {
  for (const auto& s : p.steps) std::visit([&](const auto& st) { detail::run_step(a, n, st); }, s);
}

inline void run_program(StateVector& s, const Program& p) {
  if (p.n_qubits != s.n_qubits()) throw std::invalid_argument("run_program: register width mismatch");
  detail::check_normalized(s.norm(), "run_program");
  run_program_raw(s.amplitudes().data(), s.n_qubits(), p);
}

inline void run_program(BasisTerm& b, const Program& p) {
  for (const auto& s : p.steps) std::visit([&](const auto& st) { detail::run_step(b, st); }, s);
}

}  // namespace sykq
