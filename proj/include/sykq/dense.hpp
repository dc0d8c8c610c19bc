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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "sykq/bits.hpp"
#include "sykq/pauli_string.hpp"
#include "sykq/program.hpp"
#include "sykq/state_vector.hpp"

namespace sykq {

using DenseOperator = Eigen::MatrixXcd;

// Splits a register into a system block and an ancilla block. Both lists are
// ordered; the k-th listed qubit is bit k of the corresponding block index.
struct Partition {
  int n_qubits = 0;
  std::vector<int> system;
  std::vector<int> ancilla;

  void validate() const {
    std::vector<int> all = system;
    all.insert(all.end(), ancilla.begin(), ancilla.end());
    std::sort(all.begin(), all.end());
    if (static_cast<int>(all.size()) != n_qubits) throw std::invalid_argument("Partition: blocks not exhaustive");
    for (int i = 0; i < n_qubits; ++i)
      if (all[i] != i) throw std::invalid_argument("Partition: blocks overlap or out of range");
  }

  // Full-register index of each block basis state.
  std::vector<u64> embed_system() const { return embed(system); }
  std::vector<u64> embed_ancilla() const { return embed(ancilla); }

 private:
  static std::vector<u64> embed(const std::vector<int>& qs) {
    std::vector<u64> out(u64{1} << qs.size());
    for (u64 k = 0; k < out.size(); ++k) {
      u64 v = 0;
      for (std::size_t b = 0; b < qs.size(); ++b)
        if ((k >> b) & 1) v |= u64{1} << qs[b];
      out[k] = v;
    }
    return out;
  }
};

namespace detail {

template <class Apply>
DenseOperator extract_impl(const Apply& apply, const Partition& part, const StateVector& bra_anc,
                           const StateVector& ket_anc) {
  part.validate();
  if (bra_anc.n_qubits() != static_cast<int>(part.ancilla.size()) ||
      ket_anc.n_qubits() != static_cast<int>(part.ancilla.size()))
    throw std::invalid_argument("extract_operator: ancilla state dimension mismatch");
  if (std::abs(bra_anc.norm() - 1.0) > 1e-10 || std::abs(ket_anc.norm() - 1.0) > 1e-10)
    throw std::invalid_argument("extract_operator: ancilla states must be normalized");
  const auto es = part.embed_system();
  const auto ea = part.embed_ancilla();
  const u64 ds = es.size();
  DenseOperator out(ds, ds);
  std::vector<cplx> buf(u64{1} << part.n_qubits);
  for (u64 j = 0; j < ds; ++j) {
    std::fill(buf.begin(), buf.end(), cplx{0.0, 0.0});
    for (u64 a = 0; a < ea.size(); ++a) buf[ea[a] | es[j]] = ket_anc[a];
    apply(buf.data());
    for (u64 i = 0; i < ds; ++i) {
      cplx s = 0.0;
      for (u64 a = 0; a < ea.size(); ++a)
        if (bra_anc[a] != cplx{0.0, 0.0}) s += std::conj(bra_anc[a]) * buf[ea[a] | es[i]];
      out(i, j) = s;
    }
  }
  return out;
}

}  // namespace detail

// <bra_anc| C |ket_anc> as an operator on the system block.
inline DenseOperator extract_operator(const Circuit& c, const Partition& part, const StateVector& bra_anc,
                                      const StateVector& ket_anc) {
  if (c.n_qubits != part.n_qubits) throw std::invalid_argument("extract_operator: width mismatch");
  return detail::extract_impl([&](cplx* a) { detail::run_step(a, c.n_qubits, c); }, part, bra_anc, ket_anc);
}

inline DenseOperator extract_operator(const Program& p, const Partition& part, const StateVector& bra_anc,
                                      const StateVector& ket_anc) {
  if (p.n_qubits != part.n_qubits) throw std::invalid_argument("extract_operator: width mismatch");
  return detail::extract_impl([&](cplx* a) { run_program_raw(a, p.n_qubits, p); }, part, bra_anc, ket_anc);
}

// Full unitary of a program on all of its qubits (small widths only).
inline DenseOperator program_matrix(const Program& p) {
  if (p.n_qubits > 14) throw std::invalid_argument("program_matrix: register too wide for a dense matrix");
  Partition part{p.n_qubits, {}, {}};
  for (int q = 0; q < p.n_qubits; ++q) part.system.push_back(q);
  return extract_operator(p, part, StateVector(0), StateVector(0));
}

inline DenseOperator circuit_matrix(const Circuit& c) {
  Program p(c.n_qubits);
  p.add(c);
  return program_matrix(p);
}

inline DenseOperator pauli_matrix(const PauliString& p) {
  if (p.n_qubits() > 14) throw std::invalid_argument("pauli_matrix: too many qubits");
  const u64 d = u64{1} << p.n_qubits();
  DenseOperator m = DenseOperator::Zero(d, d);
  for (u64 y = 0; y < d; ++y) m(p.basis_flip(y), y) = i_pow(p.basis_phase(y));
  return m;
}

inline double spectral_norm(const DenseOperator& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<DenseOperator> svd(m);
  return svd.singularValues()(0);
}

inline double max_abs(const DenseOperator& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline double hermiticity_error(const DenseOperator& m) { return max_abs(m - m.adjoint()); }

inline double unitarity_error(const DenseOperator& m) {
  return max_abs(m.adjoint() * m - DenseOperator::Identity(m.rows(), m.cols()));
}

// exp(-i h t) by eigendecomposition of a Hermitian h.
inline DenseOperator exact_expm(const DenseOperator& h, double t) {
  if (h.rows() != h.cols()) throw std::invalid_argument("exact_expm: matrix must be square");
  if (hermiticity_error(h) > 1e-10) throw std::invalid_argument("exact_expm: matrix is not Hermitian");
  const DenseOperator hs = (h + h.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(hs);
  if (es.info() != Eigen::Success) throw std::runtime_error("exact_expm: eigendecomposition failed");
  Eigen::VectorXcd ph(hs.rows());
  for (Eigen::Index k = 0; k < hs.rows(); ++k) ph(k) = std::exp(cplx(0.0, -es.eigenvalues()(k) * t));
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace sykq
