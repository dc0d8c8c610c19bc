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
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sykq/dense.hpp"
#include "sykq/gate.hpp"
#include "sykq/program.hpp"
#include "sykq/rng.hpp"
#include "sykq/state_vector.hpp"
#include "sykq/syk_model.hpp"

namespace sykq {

enum class PrepKind { exact, random };
enum class SelectKind { semantic, gates };

inline std::string to_string(PrepKind p) { return p == PrepKind::exact ? "exact" : "random"; }
inline std::string to_string(SelectKind s) { return s == SelectKind::semantic ? "semantic" : "gates"; }
inline PrepKind parse_prep(const std::string& s) {
  if (s == "exact") return PrepKind::exact;
  if (s == "random") return PrepKind::random;
  throw std::invalid_argument("unknown prep '" + s + "'");
}
inline SelectKind parse_select(const std::string& s) {
  if (s == "semantic") return SelectKind::semantic;
  if (s == "gates") return SelectKind::gates;
  throw std::invalid_argument("unknown select '" + s + "'");
}

struct BlockEncoding {
  RegisterLayout layout;
  SykInstance instance;  // the couplings that U encodes
  PrepKind prep = PrepKind::exact;
  SelectKind select = SelectKind::semantic;
  int depth = 0;          // random prep only
  bool mirrored = false;  // B path uses the reversed select
  Program a;
  Circuit b;
  Program v;
  Program u;
  double lambda = 0.0;
  std::vector<double> alpha;
};

// Hadamard on every index qubit.
inline Circuit build_B(const RegisterLayout& L) {
  Circuit c(L.total, "B");
  for (int q : L.index_qubits()) c.add(gates::h(q));
  return c;
}

inline int default_depth(const RegisterLayout& L) { return L.index_count * L.index_count; }

// Brick-work of real rotations on the index register. Layer k applies Ry to
// every index qubit, then Givens rotations on neighbours (i, i+1) with
// i = k mod 2, 2 + k mod 2, ... All angles are uniform on [0, 2pi).
inline Circuit build_A_random(const RegisterLayout& L, int depth, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("build_A_random: depth must be >= 1");
  Rng rng(seed);
  Circuit c(L.total, "A");
  const double two_pi = 2.0 * std::numbers::pi;
  for (int layer = 0; layer < depth; ++layer) {
    for (int i = 0; i < L.index_count; ++i) c.add(gates::ry(L.index_first + i, rng.uniform(0.0, two_pi)));
    for (int i = layer % 2; i + 1 < L.index_count; i += 2)
      c.add(gates::givens(L.index_first + i, L.index_first + i + 1, rng.uniform(0.0, two_pi)));
  }
  return c;
}

// Prepares alpha = w / |w| on the index register directly.
inline HouseholderPrep build_A_exact(const RegisterLayout& L, const std::vector<double>& weights) {
  if (weights.size() != L.index_dim()) throw std::invalid_argument("build_A_exact: need one weight per index slot");
  double nrm = 0.0;
  for (double w : weights) nrm += w * w;
  nrm = std::sqrt(nrm);
  if (nrm == 0.0) throw std::invalid_argument("build_A_exact: weight vector is zero");
  HouseholderPrep h{L.index_first, L.index_count, weights, std::nullopt};
  for (auto& x : h.alpha) x /= nrm;
  return h;
}

inline MajoranaSelect build_select_semantic(const RegisterLayout& L) {
  MajoranaSelect s{L.index_first, L.index_count, L.system_first, L.n, {}, false};
  s.slots.reserve(L.index_dim());
  for (u64 l = 0; l < L.index_dim(); ++l) s.slots.push_back(L.slot_tuple(l));
  return s;
}

namespace detail {

inline void unary_node(Circuit& c, const RegisterLayout& L, int k, int level, int ctl, int prefix) {
  if (level == L.sub_bits) {
    const int sys = L.system_first + prefix;
    c.add(gates::cnot(ctl, sys));
    c.add(gates::cnot(ctl, L.accumulator()));
    if (prefix != L.n - 1) c.add(gates::cz(L.accumulator(), sys));
    return;
  }
  const int b = L.sub_qubit(k, L.sub_bits - 1 - level);
  const int a = L.and_ancilla(level);
  c.add(gates::toffoli({ctl, true}, {b, false}, a, AndMarker::compute));
  unary_node(c, L, k, level + 1, a, 2 * prefix);
  c.add(gates::cnot(ctl, a));
  unary_node(c, L, k, level + 1, a, 2 * prefix + 1);
  c.add(gates::toffoli({ctl, true}, {b, true}, a, AndMarker::uncompute));
}

}  // namespace detail

// Applies gamma_m to the system when sub-register k holds m and the enable
// line is set. The accumulator follows the enable line until the selected
// leaf, so every earlier leaf picks up its Z.
inline Circuit majorana_primitive(const RegisterLayout& L, int k) {
  if (L.select_count == 0) throw std::invalid_argument("majorana_primitive: layout has no select workspace");
  Circuit c(L.total, "gamma");
  c.add(gates::cnot(L.enable(), L.accumulator()));
  detail::unary_node(c, L, k, 0, L.enable(), 0);
  return c;
}

// Gate-level select: gamma_p gamma_q gamma_r gamma_s, so s acts first.
inline Circuit build_select_gates(const RegisterLayout& L) {
  if (!is_pow2(static_cast<u64>(L.n))) throw std::invalid_argument("build_select_gates: N must be a power of two");
  Circuit c(L.total, "V");
  c.add(gates::x(L.enable()));
  for (int k = 0; k < 4; ++k) c.append(majorana_primitive(L, k));
  c.add(gates::x(L.enable()));
  return c;
}

// Controlled swap of p with s and q with r, which turns the select into its
// adjoint when wrapped around it.
inline Circuit register_reversal(const RegisterLayout& L, Control ctl) {
  if (L.mode != IndexMode::all_tuples) throw std::invalid_argument("register_reversal: all-tuples layout only");
  Circuit c(L.total, "S");
  auto fredkin = [&](int a, int b) {
    c.add(gates::cnot(b, a));
    c.add(gates::toffoli(ctl, {a, true}, b));
    c.add(gates::cnot(b, a));
  };
  for (int bit = 0; bit < L.sub_bits; ++bit) {
    fredkin(L.sub_qubit(0, bit), L.sub_qubit(3, bit));
    fredkin(L.sub_qubit(1, bit), L.sub_qubit(2, bit));
  }
  return c;
}

inline Program controlled(const Program& p, Control ctl) {
  Program r(p.n_qubits);
  for (const auto& s : p.steps) {
    if (const auto* c = std::get_if<Circuit>(&s)) {
      r.add(controlled(*c, ctl));
    } else if (const auto* h = std::get_if<HouseholderPrep>(&s)) {
      if (h->control) throw std::invalid_argument("controlled: preparation already controlled");
      HouseholderPrep hc = *h;
      hc.control = ctl;
      r.add(hc);
    } else {
      throw std::invalid_argument("controlled: step kind cannot be controlled");
    }
  }
  return r;
}

// Flag-controlled A (flag = 0) and B (flag = 1), then the select, then X on
// the flag, then the controlled adjoints. With `mirror` the flag = 1 branch
// runs the select between two register reversals. The result is
//   [[0, A^dag V^dag B], [B^dag V A, 0]]
// in the flag basis, or with V in place of V^dag when `mirror` is off.
inline Program compose_self_inverse_U(const RegisterLayout& L, const Program& a, const Circuit& b, const Program& v,
                                      bool mirror) {
  if (a.n_qubits != L.total || b.n_qubits != L.total || v.n_qubits != L.total)
    throw std::invalid_argument("compose_self_inverse_U: layout mismatch");
  const Control f0{L.flag, false}, f1{L.flag, true};
  Program u(L.total);
  u.append(controlled(a, f0));
  u.add(controlled(b, f1));
  if (mirror) u.add(register_reversal(L, f1));
  u.append(v);
  if (mirror) u.add(register_reversal(L, f1));
  Circuit xf(L.total, "Xflag");
  xf.add(gates::x(L.flag));
  u.add(xf);
  u.append(controlled(adjoint(a), f0));
  u.add(controlled(adjoint(b), f1));
  return u;
}

// Block partition used for every <G| . |G> projection: the system block, and
// the ancilla block ordered index, select workspace, flag.
inline Partition encoding_partition(const RegisterLayout& L) {
  Partition p{L.total, L.system_qubits(), L.index_qubits()};
  for (int q : L.select_qubits()) p.ancilla.push_back(q);
  p.ancilla.push_back(L.flag);
  return p;
}

// |G> = |+>_flag |0>_index, with the select workspace at |0>.
inline StateVector signal_state(const RegisterLayout& L) {
  const int na = L.index_count + L.select_count + 1;
  StateVector g(na);
  g[0] = std::numbers::sqrt2 / 2.0;
  g[u64{1} << (na - 1)] = std::numbers::sqrt2 / 2.0;
  return g;
}

// Real amplitudes prepared on the index register from |0>.
inline std::vector<double> amplitude_readback(const Program& a, const RegisterLayout& L) {
  StateVector s(L.total);
  run_program(s, a);
  std::vector<double> alpha(L.index_dim());
  for (u64 l = 0; l < L.index_dim(); ++l) {
    const cplx z = s[l << L.index_first];
    if (std::abs(z.imag()) > 1e-12) throw std::runtime_error("amplitude_readback: amplitude is not real");
    alpha[l] = z.real();
  }
  return alpha;
}

inline std::vector<double> amplitude_readback(const Circuit& a, const RegisterLayout& L) {
  // Run on the index register alone.
  Circuit shifted(L.index_count);
  for (Gate g : a.gates) {
    for (int& t : g.targets) t -= L.index_first;
    for (auto& c : g.controls) c.qubit -= L.index_first;
    shifted.add(std::move(g));
  }
  StateVector s(L.index_count);
  run_circuit(s, shifted);
  std::vector<double> alpha(L.index_dim());
  for (u64 l = 0; l < L.index_dim(); ++l) {
    if (std::abs(s[l].imag()) > 1e-12) throw std::runtime_error("amplitude_readback: amplitude is not real");
    alpha[l] = s[l].real();
  }
  return alpha;
}

namespace detail {

inline void finish_encoding(BlockEncoding& e, bool workspace) {
  const RegisterLayout& L = e.layout;
  e.b = build_B(L);
  if (e.select == SelectKind::gates) {
    if (!workspace) throw std::logic_error("finish_encoding: missing workspace");
    e.v = Program(L.total);
    e.v.add(build_select_gates(L));
  } else {
    e.v = Program(L.total);
    e.v.add(build_select_semantic(L));
  }
  e.mirrored = L.mode == IndexMode::all_tuples;
  e.u = compose_self_inverse_U(L, e.a, e.b, e.v, e.mirrored);
}

}  // namespace detail

// Encoding of prescribed couplings with the exact amplitude oracle. For an
// all-zero instance lambda is 0 and A is the identity.
inline BlockEncoding encode_exact(const SykInstance& inst, SelectKind select = SelectKind::semantic) {
  BlockEncoding e;
  e.layout = RegisterLayout::make(inst.n, inst.mode, select == SelectKind::gates);
  e.instance = inst;
  e.prep = PrepKind::exact;
  e.select = select;
  const std::vector<double> w = slot_weights(inst);
  e.lambda = lambda_exact(inst);
  e.a = Program(e.layout.total);
  if (e.lambda == 0.0) {
    e.alpha.assign(w.size(), 0.0);
    e.alpha[0] = 1.0;
  } else {
    HouseholderPrep h = build_A_exact(e.layout, w);
    e.alpha = h.alpha;
    e.a.add(h);
  }
  detail::finish_encoding(e, select == SelectKind::gates);
  return e;
}

// Encoding whose couplings are defined by the random circuit: with
// lambda = L sigma / 96 and beta = 1/sqrt(L), each slot carries
// w_l = lambda alpha_l / sqrt(L), so that Gaussian amplitudes of variance
// 1/L give couplings of variance sigma^2 / 96^2.
inline BlockEncoding encode_random(int n, double j, IndexMode mode, int depth, std::uint64_t seed,
                                   SelectKind select = SelectKind::semantic) {
  BlockEncoding e;
  e.layout = RegisterLayout::make(n, mode, select == SelectKind::gates);
  e.prep = PrepKind::random;
  e.select = select;
  e.depth = depth > 0 ? depth : default_depth(e.layout);
  const Circuit a = build_A_random(e.layout, e.depth, seed);
  e.alpha = amplitude_readback(a, e.layout);
  const double ld = static_cast<double>(e.layout.index_dim());
  e.lambda = ld * std::sqrt(coupling_variance(n, j)) / 96.0;
  std::vector<double> w(e.alpha.size());
  for (std::size_t l = 0; l < w.size(); ++l) w[l] = e.lambda * e.alpha[l] / std::sqrt(ld);
  e.instance = instance_from_slot_weights(n, j, mode, seed, w);
  e.a = Program(e.layout.total);
  e.a.add(a);
  detail::finish_encoding(e, select == SelectKind::gates);
  return e;
}

// max |U^2 psi - psi| over the subspace with a clean select workspace.
// Every clean basis state is checked when that subspace has at most
// `exhaustive_limit` states; otherwise `probes` random clean states are used.
inline double self_inverse_error(const BlockEncoding& e, u64 exhaustive_limit = 4096, int probes = 6,
                                 std::uint64_t seed = 7) {
  const RegisterLayout& L = e.layout;
  std::vector<int> free_q;
  for (int q = 0; q < L.total; ++q)
    if (q < L.select_first || q >= L.select_first + L.select_count) free_q.push_back(q);
  Partition part{L.total, free_q, L.select_qubits()};
  const auto emb = part.embed_system();
  const u64 dim = u64{1} << L.total;
  std::vector<cplx> buf(dim);
  double err = 0.0;
  auto check = [&](const std::vector<cplx>& in) {
    buf = in;
    run_program_raw(buf.data(), L.total, e.u);
    run_program_raw(buf.data(), L.total, e.u);
    for (u64 i = 0; i < dim; ++i) err = std::max(err, std::abs(buf[i] - in[i]));
  };
  if (emb.size() <= exhaustive_limit) {
    std::vector<cplx> in(dim, 0.0);
    for (u64 k : emb) {
      in[k] = 1.0;
      check(in);
      in[k] = 0.0;
    }
  } else {
    Rng rng(seed);
    for (int p = 0; p < probes; ++p) {
      std::vector<cplx> in(dim, 0.0);
      double nrm = 0.0;
      for (u64 k : emb) {
        in[k] = cplx(rng.normal(), rng.normal());
        nrm += std::norm(in[k]);
      }
      for (auto& z : in) z /= std::sqrt(nrm);
      check(in);
    }
  }
  return err;
}

// max |M - M^dag| for the Gram matrix M_ij = <psi_i| <G|U|G> |psi_j> of
// `probes` random system states. Costs one application of U per probe, so it
// reaches registers too wide for encoded_block.
inline double block_hermiticity_probe(const BlockEncoding& e, int probes = 4, std::uint64_t seed = 11) {
  const RegisterLayout& L = e.layout;
  const Partition part = encoding_partition(L);
  const auto es = part.embed_system();
  const auto ea = part.embed_ancilla();
  const StateVector g = signal_state(L);
  std::vector<u64> g_support;
  for (u64 a = 0; a < ea.size(); ++a)
    if (g[a] != cplx{0.0, 0.0}) g_support.push_back(a);
  Rng rng(seed);
  const Eigen::Index ds = static_cast<Eigen::Index>(es.size());
  DenseOperator psi(ds, probes), out(ds, probes);
  std::vector<cplx> buf(u64{1} << L.total);
  for (int p = 0; p < probes; ++p) {
    for (Eigen::Index i = 0; i < ds; ++i) psi(i, p) = cplx(rng.normal(), rng.normal());
    psi.col(p).normalize();
    std::fill(buf.begin(), buf.end(), cplx{0.0, 0.0});
    for (u64 a : g_support)
      for (Eigen::Index i = 0; i < ds; ++i) buf[ea[a] | es[i]] = g[a] * psi(i, p);
    run_program_raw(buf.data(), L.total, e.u);
    for (Eigen::Index i = 0; i < ds; ++i) {
      cplx s = 0.0;
      for (u64 a : g_support) s += std::conj(g[a]) * buf[ea[a] | es[i]];
      out(i, p) = s;
    }
  }
  const DenseOperator m = psi.adjoint() * out;
  return max_abs(m - m.adjoint());
}

// <G|U|G> on the system block, i.e. H_eff / lambda.
inline DenseOperator encoded_block(const BlockEncoding& e) {
  const StateVector g = signal_state(e.layout);
  return extract_operator(e.u, encoding_partition(e.layout), g, g);
}

// H_eff = lambda <G|U|G>.
inline DenseOperator encoded_hamiltonian(const BlockEncoding& e) { return e.lambda * encoded_block(e); }

}  // namespace sykq
