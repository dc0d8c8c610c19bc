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

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sykq/bits.hpp"
#include "sykq/dense.hpp"
#include "sykq/pauli_string.hpp"
#include "sykq/rng.hpp"

namespace sykq {

// all_tuples: every ordered (p,q,r,s) in [0,N)^4, including repeated indices.
// distinct_sorted: p < q < r < s only.
enum class IndexMode { all_tuples, distinct_sorted };

inline std::string to_string(IndexMode m) {
  return m == IndexMode::all_tuples ? "all-tuples" : "distinct-sorted";
}

inline IndexMode parse_index_mode(const std::string& s) {
  if (s == "all-tuples") return IndexMode::all_tuples;
  if (s == "distinct-sorted") return IndexMode::distinct_sorted;
  throw std::invalid_argument("unknown index mode '" + s + "'");
}

struct Term {
  std::array<int, 4> idx{};
  double w = 0.0;
};

struct SykInstance {
  int n = 0;
  double j = 0.0;
  IndexMode mode = IndexMode::distinct_sorted;
  std::uint64_t seed = 0;
  // Ordered lexicographically in (p, q, r, s).
  std::vector<Term> terms;
  // Weights of the identity-decoding padding slots (distinct-sorted only).
  std::vector<double> padding_weights;
};

// Coupling variance 3! J^2 / N^3.
inline double coupling_variance(int n, double j) { return 6.0 * j * j / (static_cast<double>(n) * n * n); }

// Number of index tuples in the domain.
inline u64 domain_size(int n, IndexMode mode) {
  return mode == IndexMode::all_tuples ? static_cast<u64>(n) * n * n * n : binomial(n, 4);
}

// Dimension of the index register that holds the domain.
inline u64 index_dimension(int n, IndexMode mode) {
  return u64{1} << index_bits(domain_size(n, mode));
}

inline void check_n(int n, IndexMode mode) {
  if (n < 4) throw std::invalid_argument("SYK instance needs N >= 4");
  if (n > 32) throw std::invalid_argument("SYK instance: N > 32 is not supported");
  if (mode == IndexMode::all_tuples && !is_pow2(static_cast<u64>(n)))
    throw std::invalid_argument("all-tuples mode needs N a power of two");
}

inline std::vector<std::array<int, 4>> enumerate_tuples(int n, IndexMode mode) {
  std::vector<std::array<int, 4>> out;
  out.reserve(domain_size(n, mode));
  for (int p = 0; p < n; ++p)
    for (int q = (mode == IndexMode::all_tuples ? 0 : p + 1); q < n; ++q)
      for (int r = (mode == IndexMode::all_tuples ? 0 : q + 1); r < n; ++r)
        for (int s = (mode == IndexMode::all_tuples ? 0 : r + 1); s < n; ++s) out.push_back({p, q, r, s});
  return out;
}

// J_pqrs ~ Normal(0, 3! J^2 / N^3) drawn in lexicographic tuple order; the
// stored weight is w = J_pqrs / (4 * 4!).
inline SykInstance sample_couplings(int n, double j, IndexMode mode, std::uint64_t seed) {
  check_n(n, mode);
  SykInstance inst{n, j, mode, seed, {}, {}};
  Rng rng(seed);
  const double sigma = std::sqrt(coupling_variance(n, j));
  for (const auto& t : enumerate_tuples(n, mode)) inst.terms.push_back({t, sigma * rng.normal() / 96.0});
  if (mode == IndexMode::distinct_sorted)
    inst.padding_weights.assign(index_dimension(n, mode) - domain_size(n, mode), 0.0);
  return inst;
}

// Instance with prescribed weights, one per slot of the index register
// (domain terms first, then padding).
inline SykInstance instance_from_slot_weights(int n, double j, IndexMode mode, std::uint64_t seed,
                                              const std::vector<double>& slot_w) {
  check_n(n, mode);
  const auto tuples = enumerate_tuples(n, mode);
  if (slot_w.size() != index_dimension(n, mode))
    throw std::invalid_argument("instance_from_slot_weights: wrong number of weights");
  SykInstance inst{n, j, mode, seed, {}, {}};
  for (std::size_t k = 0; k < tuples.size(); ++k) inst.terms.push_back({tuples[k], slot_w[k]});
  inst.padding_weights.assign(slot_w.begin() + tuples.size(), slot_w.end());
  return inst;
}

inline std::vector<double> slot_weights(const SykInstance& inst) {
  std::vector<double> w;
  for (const auto& t : inst.terms) w.push_back(t.w);
  w.insert(w.end(), inst.padding_weights.begin(), inst.padding_weights.end());
  return w;
}

// gamma_l = X_l Z_{l-1} ... Z_0.
inline PauliString majorana_pauli(int l, int n) {
  if (l < 0 || l >= n) throw std::out_of_range("majorana_pauli: mode index out of range");
  return PauliString(n, u64{1} << l, (u64{1} << l) - 1, 0);
}

inline PauliString term_string(int p, int q, int r, int s, int n) {
  return majorana_pauli(p, n) * majorana_pauli(q, n) * majorana_pauli(r, n) * majorana_pauli(s, n);
}

// Dense sum of w_l * gamma_p gamma_q gamma_r gamma_s, plus the identity for
// padding slots. No symmetrization is applied.
inline DenseOperator assemble_hamiltonian(const SykInstance& inst) {
  if (inst.n > 12) throw std::invalid_argument("assemble_hamiltonian: N > 12 is too large for dense assembly");
  const u64 d = u64{1} << inst.n;
  DenseOperator h = DenseOperator::Zero(d, d);
  for (const auto& t : inst.terms) {
    if (t.w == 0.0) continue;
    const PauliString ps = term_string(t.idx[0], t.idx[1], t.idx[2], t.idx[3], inst.n);
    for (u64 y = 0; y < d; ++y) h(ps.basis_flip(y), y) += t.w * i_pow(ps.basis_phase(y));
  }
  double pad = 0.0;
  for (double w : inst.padding_weights) pad += w;
  if (pad != 0.0) h.diagonal().array() += pad;
  return h;
}

// Spectral norm of the anti-Hermitian part of the assembled sum.
inline double hermiticity_defect(const SykInstance& inst) {
  const DenseOperator h = assemble_hamiltonian(inst);
  return spectral_norm((h - h.adjoint()) / 2.0);
}

// sqrt(L * sum w^2), with L the index register dimension.
inline double lambda_exact(const SykInstance& inst) {
  if (inst.terms.empty()) throw std::invalid_argument("lambda_exact: instance has no weights");
  double s = 0.0;
  for (double w : slot_weights(inst)) s += w * w;
  return std::sqrt(static_cast<double>(index_dimension(inst.n, inst.mode)) * s);
}

inline double sum_abs_weights(const SykInstance& inst) {
  double s = 0.0;
  for (double w : slot_weights(inst)) s += std::abs(w);
  return s;
}

// Qubit map. From qubit 0 upward: system modes, index register, optional
// select workspace, flag. In all-tuples mode the index register is four
// log2(N)-bit fields with s lowest and p highest, so slot
// ((p*N + q)*N + r)*N + s encodes (p, q, r, s). In distinct-sorted mode the
// slot is the lexicographic rank of (p, q, r, s); slots past C(N,4) are
// padding. The select workspace is only present for the gate-level select:
// log2(N) AND ancillas, one accumulator and one enable line.
struct RegisterLayout {
  int n = 0;
  IndexMode mode = IndexMode::distinct_sorted;
  int system_first = 0;
  int index_first = 0;
  int index_count = 0;
  int sub_bits = 0;
  int select_first = 0;
  int select_count = 0;
  int flag = 0;
  int total = 0;

  static RegisterLayout make(int n, IndexMode mode, bool select_workspace) {
    check_n(n, mode);
    RegisterLayout L;
    L.n = n;
    L.mode = mode;
    L.index_first = n;
    L.index_count = index_bits(domain_size(n, mode));
    L.sub_bits = mode == IndexMode::all_tuples ? ilog2(static_cast<u64>(n)) : 0;
    L.select_first = L.index_first + L.index_count;
    if (select_workspace) {
      if (mode != IndexMode::all_tuples)
        throw std::invalid_argument("gate-level select needs the all-tuples layout");
      L.select_count = L.sub_bits + 2;
    }
    L.flag = L.select_first + L.select_count;
    L.total = L.flag + 1;
    return L;
  }

  u64 index_dim() const { return u64{1} << index_count; }
  int and_ancilla(int k) const { return select_first + k; }
  int accumulator() const { return select_first + sub_bits; }
  int enable() const { return select_first + sub_bits + 1; }
  // Index qubits of sub-register k (0 = s, 1 = r, 2 = q, 3 = p).
  int sub_qubit(int k, int bit) const { return index_first + k * sub_bits + bit; }

  std::vector<int> system_qubits() const { return range(system_first, n); }
  std::vector<int> index_qubits() const { return range(index_first, index_count); }
  std::vector<int> select_qubits() const { return range(select_first, select_count); }

  // Decodes a slot into its four mode indices; padding decodes to -1s.
  std::array<int, 4> slot_tuple(u64 slot) const {
    if (mode == IndexMode::all_tuples) {
      const u64 m = static_cast<u64>(n) - 1;
      const int b = sub_bits;
      return {static_cast<int>((slot >> (3 * b)) & m), static_cast<int>((slot >> (2 * b)) & m),
              static_cast<int>((slot >> b) & m), static_cast<int>(slot & m)};
    }
    const auto tuples = enumerate_tuples(n, mode);
    if (slot < tuples.size()) return tuples[slot];
    return {-1, -1, -1, -1};
  }

 private:
  static std::vector<int> range(int first, int count) {
    std::vector<int> v;
    for (int i = 0; i < count; ++i) v.push_back(first + i);
    return v;
  }
};

}  // namespace sykq
