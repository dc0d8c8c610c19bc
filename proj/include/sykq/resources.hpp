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
#include <stdexcept>

#include "sykq/bits.hpp"
#include "sykq/evolution.hpp"
#include "sykq/oracles.hpp"

namespace sykq {

// Closed-form select cost: 4N - 4 T per Majorana, four Majoranas per term.
inline long long majorana_t_count(long long n) {
  if (n < 2) throw std::invalid_argument("majorana_t_count: N must be >= 2");
  return 4 * n - 4;
}
inline long long select_t_count(long long n) { return 4 * majorana_t_count(n); }

// Layout holding only what the gate-level select touches. Unlike
// RegisterLayout::make it accepts N = 2.
inline RegisterLayout select_layout(int n) {
  if (n < 2 || !is_pow2(static_cast<u64>(n))) throw std::invalid_argument("select_layout: N must be a power of two >= 2");
  RegisterLayout L;
  L.n = n;
  L.mode = IndexMode::all_tuples;
  L.sub_bits = ilog2(static_cast<u64>(n));
  L.index_first = n;
  L.index_count = 4 * L.sub_bits;
  L.select_first = L.index_first + L.index_count;
  L.select_count = L.sub_bits + 2;
  L.flag = L.select_first + L.select_count;
  L.total = L.flag + 1;
  return L;
}

inline TLedger compiled_select_ledger(int n) { return t_ledger(build_select_gates(select_layout(n))); }
inline TLedger compiled_majorana_ledger(int n) { return t_ledger(majorana_primitive(select_layout(n), 0)); }

// N^(5/2) J sqrt(3!) / (4 * 4!).
inline double lambda_estimate(double n, double j) { return std::pow(n, 2.5) * j * std::sqrt(6.0) / 96.0; }

// Twice the Jacobi-Anger order: 2 ceil(lt + (3^(2/3)/2)(lt)^(1/3) ln^(2/3)(1/eps)).
inline long long query_count(double lambda, double t, double epsilon) {
  const double lt = lambda * t;
  if (!(lt > 0.0)) throw std::invalid_argument("query_count: lambda * t must be > 0");
  const double lg = std::max(0.0, std::log(1.0 / epsilon));
  return 2 * static_cast<long long>(std::ceil(lt + std::cbrt(9.0) / 2.0 * std::cbrt(lt) * std::pow(lg, 2.0 / 3.0)));
}

// (2 / sqrt 6) N^(7/2) J t.
inline double leading_t_count(double n, double j, double t) {
  return 2.0 / std::sqrt(6.0) * std::pow(n, 3.5) * j * t;
}

struct OracleCosts {
  double c_a = 0.0;
  double c_b = 0.0;
  double c_u = 0.0;
};

// The select dominates. Each query applies U twice (the quantum signal
// processing doubling), so the default per-query cost is 2 (16N - 16) and
// the state preparations are treated as lower order.
inline OracleCosts default_costs(int n) {
  return OracleCosts{0.0, 0.0, 2.0 * static_cast<double>(select_t_count(n))};
}

// (C_A + C_B + C_U) (lambda t + ln(1/eps) / ln ln(1/eps)).
inline double total_cost(double n, double j, double t, double epsilon, const OracleCosts& c) {
  if (c.c_a < 0 || c.c_b < 0 || c.c_u < 0) throw std::invalid_argument("total_cost: costs must be nonnegative");
  if (!(epsilon > 0.0 && epsilon < 1.0 / std::exp(1.0)))
    throw std::invalid_argument("total_cost: need 0 < epsilon < 1/e");
  const double lg = std::log(1.0 / epsilon);
  return (c.c_a + c.c_b + c.c_u) * (lambda_estimate(n, j) * t + lg / std::log(lg));
}

// Flag, four index fields and the AND ancillas, log2(N) bits each (rounded
// up). The select also uses an accumulator and an enable line, reported
// separately.
inline int ancilla_count(int n) {
  if (n < 2) throw std::invalid_argument("ancilla_count: N must be >= 2");
  const int b = ilog2(std::bit_ceil(static_cast<u64>(n)));
  return 4 * b + b + 1;
}
inline int select_extra_qubits() { return 2; }

struct ResourceReport {
  int n = 0;
  double j_t = 0.0;
  double epsilon = 0.0;
  long long t_count_select = 0;
  double t_count_total_leading = 0.0;
  long long query_count = 0;
  int ancilla_count = 0;
  double lambda_est = 0.0;
  double total_cost = 0.0;
};

inline ResourceReport resource_report(int n, double j, double t, double epsilon) {
  ResourceReport r;
  r.n = n;
  r.j_t = j * t;
  r.epsilon = epsilon;
  r.t_count_select = select_t_count(n);
  r.lambda_est = lambda_estimate(n, j);
  r.t_count_total_leading = leading_t_count(n, j, t);
  r.query_count = query_count(r.lambda_est, t, epsilon);
  r.ancilla_count = ancilla_count(n);
  r.total_cost = total_cost(n, j, t, epsilon, default_costs(n));
  return r;
}

}  // namespace sykq
