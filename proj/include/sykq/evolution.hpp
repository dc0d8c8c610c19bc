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

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "sykq/bessel.hpp"
#include "sykq/dense.hpp"
#include "sykq/oracles.hpp"
#include "sykq/walk.hpp"

namespace sykq {

enum class CutoffStrategy { formula, bruteforce };
enum class EvolutionPath { classical, walk };

struct EvolutionPlan {
  double tau = 0.0;
  double epsilon = 0.0;
  int k = 1;
  CutoffStrategy strategy = CutoffStrategy::bruteforce;
  std::vector<cplx> coeffs;  // c_0 .. c_K
  double tail_bound = 0.0;   // 2 sum_{n > K} |J_n(tau)|
};

namespace detail {

// 2 sum_{n=K+1}^{K+200} |J_n(tau)|, stopping once past the turning point the
// terms drop below 1e-18.
inline double bessel_tail(const std::vector<double>& j, double tau, int k) {
  double s = 0.0;
  for (int n = k + 1; n <= k + 200 && n < static_cast<int>(j.size()); ++n) {
    const double a = std::abs(j[n]);
    if (n > tau && a < 1e-18) break;
    s += a;
  }
  return 2.0 * s;
}

inline std::vector<double> tail_table(double tau, int kmax) { return bessel_j_all(kmax + 201, tau); }

}  // namespace detail

// Smallest K >= 1 whose Bessel tail is at most epsilon.
inline int cutoff_bruteforce(double tau, double epsilon) {
  if (tau < 0.0) throw std::invalid_argument("cutoff_bruteforce: tau must be >= 0");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("cutoff_bruteforce: need 0 < epsilon < 1");
  int kmax = static_cast<int>(std::ceil(tau)) + 64;
  for (;;) {
    const auto j = detail::tail_table(tau, kmax);
    for (int k = 1; k <= kmax; ++k)
      if (detail::bessel_tail(j, tau, k) <= epsilon) return k;
    kmax *= 2;
  }
}

// ceil(tau + (3^(2/3) / 2) tau^(1/3) ln^(2/3)(1/epsilon)), at least 1.
inline int cutoff_formula(double tau, double epsilon) {
  if (tau < 0.0) throw std::invalid_argument("cutoff_formula: tau must be >= 0");
  if (!(epsilon > 0.0)) throw std::invalid_argument("cutoff_formula: epsilon must be > 0");
  const double lg = std::max(0.0, std::log(1.0 / epsilon));
  const double k = tau + std::cbrt(9.0) / 2.0 * std::cbrt(tau) * std::pow(lg, 2.0 / 3.0);
  return std::max(1, static_cast<int>(std::ceil(k)));
}

inline double asymptotic_coefficient(double tau, double epsilon, int k) {
  return (k - tau) / (std::cbrt(tau) * std::pow(std::log(1.0 / epsilon), 2.0 / 3.0));
}

// c_0 = J_0(-tau), c_n = 2 i^n J_n(-tau) for n = 1..K.
inline EvolutionPlan make_plan(double tau, double epsilon, CutoffStrategy strategy = CutoffStrategy::bruteforce) {
  if (tau < 0.0) throw std::invalid_argument("make_plan: tau must be >= 0");
  EvolutionPlan p;
  p.tau = tau;
  p.epsilon = epsilon;
  p.strategy = strategy;
  if (tau == 0.0)
    p.k = 1;
  else
    p.k = strategy == CutoffStrategy::bruteforce ? cutoff_bruteforce(tau, epsilon) : cutoff_formula(tau, epsilon);
  const auto j = detail::tail_table(tau, p.k);
  p.coeffs.resize(p.k + 1);
  p.coeffs[0] = j[0];
  for (int n = 1; n <= p.k; ++n) {
    const double jn = (n & 1) ? -j[n] : j[n];  // J_n(-tau)
    p.coeffs[n] = 2.0 * i_pow(n) * jn;
  }
  p.tail_bound = detail::bessel_tail(j, tau, p.k);
  return p;
}

// sum_n c_n T_n(x) for scalar x in [-1, 1].
inline cplx evaluate_plan(const EvolutionPlan& p, double x) {
  double t0 = 1.0, t1 = x;
  cplx s = p.coeffs[0];
  for (int n = 1; n <= p.k; ++n) {
    s += p.coeffs[n] * t1;
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return s;
}

inline DenseOperator combine(const EvolutionPlan& p, const std::vector<DenseOperator>& t) {
  if (static_cast<int>(t.size()) < p.k + 1) throw std::invalid_argument("combine: not enough Chebyshev terms");
  DenseOperator out = p.coeffs[0] * t[0];
  for (int n = 1; n <= p.k; ++n) out += p.coeffs[n] * t[n];
  return out;
}

// Truncated Jacobi-Anger series for exp(-i H_eff t), with T_n(H_eff / lambda)
// from the dense recurrence or from the walk projections.
// `block` is <G|U|G> = H_eff / lambda.
inline DenseOperator synthesize_evolution(const BlockEncoding& e, const DenseOperator& block, double t,
                                          double epsilon, EvolutionPath path, EvolutionPlan* plan_out = nullptr) {
  if (hermiticity_error(block) > 1e-10) throw std::invalid_argument("synthesize_evolution: H_eff is not Hermitian");
  const double tau = e.lambda * t;
  EvolutionPlan plan = make_plan(std::abs(tau), epsilon);
  if (tau < 0.0)
    for (auto& c : plan.coeffs) c = std::conj(c);  // exp(+i|tau|x)
  if (plan_out) *plan_out = plan;
  if (e.lambda == 0.0) return DenseOperator::Identity(block.rows(), block.cols());
  std::vector<DenseOperator> tn;
  if (path == EvolutionPath::classical)
    tn = chebyshev_first_kind(block, plan.k);
  else
    tn = chebyshev_projections(make_walk(e), plan.k);
  return combine(plan, tn);
}

inline DenseOperator synthesize_evolution(const BlockEncoding& e, double t, double epsilon, EvolutionPath path,
                                          EvolutionPlan* plan_out = nullptr) {
  return synthesize_evolution(e, encoded_block(e), t, epsilon, path, plan_out);
}

// Applies the synthesized evolution to a system state. The truncated series
// is not exactly unitary and the result is not renormalized.
inline StateVector evolve_state(const BlockEncoding& e, const StateVector& psi, double t, double epsilon) {
  if (psi.n_qubits() != e.layout.n) throw std::invalid_argument("evolve_state: width mismatch");
  const DenseOperator op = synthesize_evolution(e, t, epsilon, EvolutionPath::classical);
  Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(), psi.dim());
  Eigen::VectorXcd r = op * v;
  return StateVector(psi.n_qubits(), std::vector<cplx>(r.data(), r.data() + r.size()));
}

}  // namespace sykq
