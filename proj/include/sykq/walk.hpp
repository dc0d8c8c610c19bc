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
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sykq/dense.hpp"
#include "sykq/oracles.hpp"
#include "sykq/program.hpp"

namespace sykq {

struct WalkOperator {
  RegisterLayout layout;
  Program u;
  Program r;
  Program w;  // u, then r
  double lambda = 0.0;
};

// 2|G><G| - I on flag and index, identity on the rest.
inline Program reflection_R(const RegisterLayout& L) {
  Program r(L.total);
  Circuit h(L.total, "Hflag");
  h.add(gates::h(L.flag));
  std::vector<int> qs = L.index_qubits();
  qs.push_back(L.flag);
  r.add(h);
  r.add(ZeroReflection{qs});
  r.add(h);
  return r;
}

inline WalkOperator make_walk(const BlockEncoding& e) {
  WalkOperator w{e.layout, e.u, reflection_R(e.layout), Program(e.layout.total), e.lambda};
  w.w.append(e.u);
  w.w.append(w.r);
  return w;
}

// Chebyshev polynomials of a Hermitian matrix by the three-term recurrence.
// Returns T_0..T_nmax (first kind) or U_0..U_nmax (second kind).
inline std::vector<DenseOperator> chebyshev_first_kind(const DenseOperator& x, int nmax) {
  std::vector<DenseOperator> t;
  t.push_back(DenseOperator::Identity(x.rows(), x.cols()));
  if (nmax >= 1) t.push_back(x);
  for (int n = 2; n <= nmax; ++n) t.push_back(2.0 * x * t[n - 1] - t[n - 2]);
  return t;
}

inline std::vector<DenseOperator> chebyshev_second_kind(const DenseOperator& x, int nmax) {
  std::vector<DenseOperator> u;
  u.push_back(DenseOperator::Identity(x.rows(), x.cols()));
  if (nmax >= 1) u.push_back(2.0 * x);
  for (int n = 2; n <= nmax; ++n) u.push_back(2.0 * x * u[n - 1] - u[n - 2]);
  return u;
}

// <G|W^n|G> for n = 0..nmax, from one sweep of W per system column.
inline std::vector<DenseOperator> chebyshev_projections(const WalkOperator& w, int nmax) {
  if (nmax < 0) throw std::invalid_argument("chebyshev_projections: nmax must be >= 0");
  const Partition part = encoding_partition(w.layout);
  const StateVector g = signal_state(w.layout);
  const auto es = part.embed_system();
  const auto ea = part.embed_ancilla();
  std::vector<u64> g_support;
  for (u64 a = 0; a < ea.size(); ++a)
    if (g[a] != cplx{0.0, 0.0}) g_support.push_back(a);
  const u64 ds = es.size();
  std::vector<DenseOperator> out(nmax + 1, DenseOperator(ds, ds));
  std::vector<cplx> buf(u64{1} << w.layout.total);
  for (u64 j = 0; j < ds; ++j) {
    std::fill(buf.begin(), buf.end(), cplx{0.0, 0.0});
    for (u64 a : g_support) buf[ea[a] | es[j]] = g[a];
    for (int n = 0; n <= nmax; ++n) {
      if (n > 0) run_program_raw(buf.data(), w.layout.total, w.w);
      for (u64 i = 0; i < ds; ++i) {
        cplx s = 0.0;
        for (u64 a : g_support) s += std::conj(g[a]) * buf[ea[a] | es[i]];
        out[n](i, j) = s;
      }
    }
  }
  return out;
}

inline DenseOperator chebyshev_projection(const WalkOperator& w, int n) { return chebyshev_projections(w, n).back(); }

struct EigenphaseReport {
  int count = 0;
  double max_phase_error = 0.0;
  double max_invariance_residual = 0.0;
  bool pairs_ok = true;
  std::vector<double> h;
  std::vector<double> phase;  // |arg| measured
};

inline double wrap_phase(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a > std::numbers::pi) a -= two_pi;
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

// For each eigenpair (h, |h>) of H_eff, W maps span{|G>|h>, W|G>|h>} to itself
// with eigenvalues exp(+-i arccos(h / lambda)). `block` is <G|U|G> = H_eff / lambda.
inline EigenphaseReport walk_eigenphase_check(const WalkOperator& w, const DenseOperator& block, double tol = 1e-8) {
  if (hermiticity_error(block) > 1e-10) throw std::invalid_argument("walk_eigenphase_check: H_eff is not Hermitian");
  EigenphaseReport rep;
  Eigen::SelfAdjointEigenSolver<DenseOperator> es((block + block.adjoint()) / 2.0);
  const Partition part = encoding_partition(w.layout);
  const StateVector g = signal_state(w.layout);
  const auto esys = part.embed_system();
  const auto ea = part.embed_ancilla();
  const int n = w.layout.total;
  const u64 dim = u64{1} << n;
  auto dot = [&](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx s = 0.0;
    for (u64 i = 0; i < dim; ++i) s += std::conj(a[i]) * b[i];
    return s;
  };
  for (Eigen::Index k = 0; k < block.rows(); ++k) {
    double x = es.eigenvalues()(k);
    const double hv = w.lambda * x;
    if (std::abs(x) > 1.0 + 1e-10) throw std::runtime_error("walk_eigenphase_check: |h| exceeds lambda");
    x = std::clamp(x, -1.0, 1.0);
    const double theta = std::acos(x);
    std::vector<cplx> e1(dim, 0.0);
    for (u64 a = 0; a < ea.size(); ++a) {
      if (g[a] == cplx{0.0, 0.0}) continue;
      for (u64 i = 0; i < esys.size(); ++i) e1[ea[a] | esys[i]] = g[a] * es.eigenvectors()(i, k);
    }
    std::vector<cplx> we1 = e1;
    run_program_raw(we1.data(), n, w.w);
    std::vector<cplx> e2 = we1;
    const cplx c11 = dot(e1, we1);
    for (u64 i = 0; i < dim; ++i) e2[i] -= c11 * e1[i];
    double n2 = std::sqrt(std::abs(dot(e2, e2)));
    double phase_err = 0.0, resid = 0.0;
    double measured = 0.0;
    if (n2 < 1e-7) {
      // |h| = lambda: |G>|h> is itself an eigenvector with eigenvalue +-1.
      measured = std::abs(std::arg(c11));
      phase_err = std::abs(measured - theta);
      resid = n2;
    } else {
      for (auto& z : e2) z /= n2;
      std::vector<cplx> we2 = e2;
      run_program_raw(we2.data(), n, w.w);
      Eigen::Matrix2cd m;
      m(0, 0) = c11;
      m(1, 0) = dot(e2, we1);
      m(0, 1) = dot(e1, we2);
      m(1, 1) = dot(e2, we2);
      for (u64 i = 0; i < dim; ++i) {
        const cplx r = we2[i] - m(0, 1) * e1[i] - m(1, 1) * e2[i];
        resid += std::norm(r);
      }
      resid = std::sqrt(resid);
      Eigen::ComplexEigenSolver<Eigen::Matrix2cd> ce(m);
      const double a0 = std::arg(ce.eigenvalues()(0)), a1 = std::arg(ce.eigenvalues()(1));
      const double pair = std::abs(wrap_phase(a0 + a1));
      phase_err = std::max({std::abs(std::abs(a0) - theta), std::abs(std::abs(a1) - theta), pair});
      measured = std::abs(a0);
      if (pair > tol) rep.pairs_ok = false;
    }
    rep.max_phase_error = std::max(rep.max_phase_error, phase_err);
    rep.max_invariance_residual = std::max(rep.max_invariance_residual, resid);
    rep.h.push_back(hv);
    rep.phase.push_back(measured);
    ++rep.count;
  }
  return rep;
}

struct OaaWalk {
  RegisterLayout layout;
  DenseOperator ut;  // B^dag V A on index (+) system, flag held at 0
  DenseOperator h;   // <0|Ut|0> = H / lambda
  int index_dim = 0;
  int system_dim = 0;

  // R0 = 2|0><0| - I on the index register: keep the index-0 rows, negate the rest.
  DenseOperator reflect(DenseOperator x) const {
    x.bottomRows(x.rows() - system_dim) *= -1.0;
    return x;
  }
  // R0 Ut^dag R0 Ut applied to the columns of x.
  DenseOperator step(const DenseOperator& x) const { return reflect(ut.adjoint() * reflect(ut * x)); }
  // The literal form Ut^dag R0 Ut.
  DenseOperator literal_step(const DenseOperator& x) const { return ut.adjoint() * reflect(ut * x); }
};

// Dense operators for amplitude amplification on index and system. Index
// occupies the high bits of the combined index, so a block (i, j) of size
// system_dim is <i|.|j> on the index register.
inline OaaWalk build_oaa_walk(const BlockEncoding& e) {
  const RegisterLayout& L = e.layout;
  if (L.index_count + L.n > 12) throw std::invalid_argument("build_oaa_walk: register too wide for dense checks");
  Program ut(L.total);
  ut.append(e.a);
  ut.append(e.v);
  ut.add(adjoint(e.b));
  Partition part{L.total, L.system_qubits(), L.select_qubits()};
  for (int q : L.index_qubits()) part.system.push_back(q);
  part.ancilla.push_back(L.flag);
  const StateVector zero(static_cast<int>(part.ancilla.size()));
  OaaWalk o;
  o.layout = L;
  o.ut = extract_operator(ut, part, zero, zero);
  o.index_dim = static_cast<int>(L.index_dim());
  o.system_dim = 1 << L.n;
  o.h = o.ut.topLeftCorner(o.system_dim, o.system_dim);
  return o;
}

struct OaaReport {
  std::vector<double> even_projected;  // |<0|step^m|0> - T_2m|
  std::vector<double> odd_projected;   // |<0|Ut step^m|0> - T_2m+1|
  std::vector<double> even_full;
  std::vector<double> odd_full;
  std::vector<double> literal_even_projected;  // same check with Ut^dag R0 Ut
  double max_error() const {
    double m = 0.0;
    for (const auto* v : {&even_projected, &odd_projected, &even_full, &odd_full})
      for (double x : *v) m = std::max(m, x);
    return m;
  }
};

// Checks, for m = 0..m_max and with H read as I (x) H_eff/lambda and
// P = |0><0| (x) I,
//   <0|step^m|0> = T_2m,  <0|Ut step^m|0> = T_2m+1,
//   Ut step^m P = (Ut - H) P U_2m + P T_2m+1,
//   step^m P = (H - Ut^dag) P U_2m-1 + P T_2m,  with U_-1 = 0.
// Both sides vanish off the range of P, so only the P columns are compared.
inline OaaReport verify_oaa_identities(const OaaWalk& o, int m_max) {
  OaaReport rep;
  const int ds = o.system_dim;
  const Eigen::Index d = o.ut.rows();
  const auto T = chebyshev_first_kind(o.h, 2 * m_max + 1);
  const auto U = chebyshev_second_kind(o.h, 2 * m_max + 1);
  auto top = [&](const DenseOperator& x) {
    DenseOperator r = DenseOperator::Zero(d, ds);
    r.topRows(ds) = x;
    return r;
  };
  const DenseOperator hp = top(o.h);                       // H P, columns of P
  const DenseOperator ut_p = o.ut.leftCols(ds);            // Ut P
  const DenseOperator utd_p = o.ut.adjoint().leftCols(ds); // Ut^dag P
  DenseOperator q = top(DenseOperator::Identity(ds, ds));  // step^m P
  DenseOperator lit = q;
  for (int m = 0; m <= m_max; ++m) {
    if (m > 0) {
      q = o.step(q);
      lit = o.literal_step(lit);
    }
    const DenseOperator odd = o.ut * q;
    rep.even_projected.push_back(spectral_norm(q.topRows(ds) - T[2 * m]));
    rep.odd_projected.push_back(spectral_norm(odd.topRows(ds) - T[2 * m + 1]));
    rep.literal_even_projected.push_back(spectral_norm(lit.topRows(ds) - T[2 * m]));
    const DenseOperator odd_rhs = (ut_p - hp) * U[2 * m] + top(T[2 * m + 1]);
    rep.odd_full.push_back(spectral_norm(odd - odd_rhs));
    DenseOperator even_rhs = top(T[2 * m]);
    if (m > 0) even_rhs += (hp - utd_p) * U[2 * m - 1];
    rep.even_full.push_back(spectral_norm(q - even_rhs));
  }
  return rep;
}

}  // namespace sykq
