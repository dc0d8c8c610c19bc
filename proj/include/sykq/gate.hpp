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
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sykq {

enum class GateKind { H, X, Y, Z, S, Sdg, T, Tdg, CNOT, CZ, Toffoli, Ry, Givens };

inline const char* gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::Ry: return "RY";
    case GateKind::Givens: return "GIVENS";
  }
  return "?";
}

// A control fires when the qubit holds `value`.
struct Control {
  int qubit = 0;
  bool value = true;
  bool operator==(const Control&) const = default;
};

// Marks a Toffoli as one half of a temporary logical-AND pair. Only the
// resource ledger looks at it; the simulator runs every Toffoli unitarily.
enum class AndMarker { none, compute, uncompute };

// `controls` lists the gate's native controls first (CNOT: 1, CZ: 1,
// Toffoli: 2), followed by any controls added by wrapping.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> targets;
  std::vector<Control> controls;
  double angle = 0.0;
  AndMarker marker = AndMarker::none;

  bool operator==(const Gate&) const = default;

  int native_controls() const {
    switch (kind) {
      case GateKind::CNOT:
      case GateKind::CZ: return 1;
      case GateKind::Toffoli: return 2;
      default: return 0;
    }
  }
  int native_targets() const { return kind == GateKind::Givens ? 2 : 1; }

  bool is_x_type() const {
    return kind == GateKind::X || kind == GateKind::CNOT || kind == GateKind::Toffoli;
  }
};

namespace gates {

inline Gate single(GateKind k, int q) { return Gate{k, {q}, {}, 0.0, AndMarker::none}; }
inline Gate h(int q) { return single(GateKind::H, q); }
inline Gate x(int q) { return single(GateKind::X, q); }
inline Gate y(int q) { return single(GateKind::Y, q); }
inline Gate z(int q) { return single(GateKind::Z, q); }
inline Gate s(int q) { return single(GateKind::S, q); }
inline Gate sdg(int q) { return single(GateKind::Sdg, q); }
inline Gate t(int q) { return single(GateKind::T, q); }
inline Gate tdg(int q) { return single(GateKind::Tdg, q); }
inline Gate cnot(int c, int tq, bool value = true) {
  return Gate{GateKind::CNOT, {tq}, {{c, value}}, 0.0, AndMarker::none};
}
inline Gate cz(int c, int tq) { return Gate{GateKind::CZ, {tq}, {{c, true}}, 0.0, AndMarker::none}; }
inline Gate toffoli(Control c1, Control c2, int tq, AndMarker m = AndMarker::none) {
  return Gate{GateKind::Toffoli, {tq}, {c1, c2}, 0.0, m};
}
inline Gate ry(int q, double theta) { return Gate{GateKind::Ry, {q}, {}, theta, AndMarker::none}; }
// Real rotation mixing |a=1,b=0> and |a=0,b=1>:
//   |a=1,b=0> -> cos(theta)|a=1,b=0> + sin(theta)|a=0,b=1>
//   |a=0,b=1> -> -sin(theta)|a=1,b=0> + cos(theta)|a=0,b=1>
// |a=0,b=0> and |a=1,b=1> are untouched.
inline Gate givens(int a, int b, double theta) {
  return Gate{GateKind::Givens, {a, b}, {}, theta, AndMarker::none};
}

}  // namespace gates

inline Gate adjoint(const Gate& g) {
  Gate r = g;
  switch (g.kind) {
    case GateKind::S: r.kind = GateKind::Sdg; break;
    case GateKind::Sdg: r.kind = GateKind::S; break;
    case GateKind::T: r.kind = GateKind::Tdg; break;
    case GateKind::Tdg: r.kind = GateKind::T; break;
    case GateKind::Ry:
    case GateKind::Givens: r.angle = -g.angle; break;
    default: break;
  }
  if (g.marker == AndMarker::compute) r.marker = AndMarker::uncompute;
  if (g.marker == AndMarker::uncompute) r.marker = AndMarker::compute;
  return r;
}

inline void validate(const Gate& g, int n_qubits) {
  if (static_cast<int>(g.targets.size()) != g.native_targets())
    throw std::invalid_argument(std::string("gate ") + gate_name(g.kind) + ": wrong target count");
  if (static_cast<int>(g.controls.size()) < g.native_controls())
    throw std::invalid_argument(std::string("gate ") + gate_name(g.kind) + ": missing controls");
  std::vector<int> all = g.targets;
  for (const auto& c : g.controls) all.push_back(c.qubit);
  for (int q : all)
    if (q < 0 || q >= n_qubits)
      throw std::out_of_range(std::string("gate ") + gate_name(g.kind) + ": qubit index out of range");
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument(std::string("gate ") + gate_name(g.kind) + ": repeated qubit");
}

struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
  std::string label;

  Circuit() = default;
  explicit Circuit(int n, std::string lbl = {}) : n_qubits(n), label(std::move(lbl)) {}

  Circuit& add(Gate g) {
    validate(g, n_qubits);
    gates.push_back(std::move(g));
    return *this;
  }
  Circuit& append(const Circuit& c) {
    if (c.n_qubits > n_qubits) throw std::invalid_argument("Circuit::append: width mismatch");
    gates.insert(gates.end(), c.gates.begin(), c.gates.end());
    return *this;
  }
  std::size_t size() const { return gates.size(); }
  bool operator==(const Circuit& o) const { return n_qubits == o.n_qubits && gates == o.gates; }
};

inline Circuit adjoint(const Circuit& c) {
  const std::string& l = c.label;
  const bool is_dag = l.size() > 4 && l.compare(l.size() - 4, 4, "^dag") == 0;
  Circuit r(c.n_qubits, l.empty() ? l : (is_dag ? l.substr(0, l.size() - 4) : l + "^dag"));
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.gates.push_back(adjoint(*it));
  return r;
}

// Adds `ctl` to every gate. AND markers are dropped: a controlled AND pair is
// no longer a two-input AND.
inline Circuit controlled(const Circuit& c, Control ctl, int n_qubits = -1) {
  Circuit r(n_qubits < 0 ? c.n_qubits : n_qubits, c.label);
  r.gates.reserve(c.gates.size());
  for (Gate g : c.gates) {
    g.controls.push_back(ctl);
    g.marker = AndMarker::none;
    r.add(std::move(g));
  }
  return r;
}

// Non-Clifford accounting. T and T-dagger cost one T each. A Toffoli (an X
// with exactly two controls) costs 4 unless it is the uncompute half of an
// AND pair, which is done by measurement and costs none. Everything else that
// is neither Clifford nor a Toffoli is tallied separately and carries no
// T figure here.
struct TLedger {
  long long t_count = 0;
  long long t_gates = 0;
  long long and_compute = 0;
  long long and_uncompute = 0;
  long long toffoli = 0;
  long long clifford = 0;
  long long rotations = 0;
  long long other_controlled = 0;
};

inline TLedger t_ledger(const Circuit& c) {
  TLedger L;
  for (const Gate& g : c.gates) {
    const int nc = static_cast<int>(g.controls.size());
    if (g.is_x_type() && nc == 2) {
      if (g.marker == AndMarker::compute) {
        ++L.and_compute;
        L.t_count += 4;
      } else if (g.marker == AndMarker::uncompute) {
        ++L.and_uncompute;
      } else {
        ++L.toffoli;
        L.t_count += 4;
      }
      continue;
    }
    if (nc == 0 && (g.kind == GateKind::T || g.kind == GateKind::Tdg)) {
      ++L.t_gates;
      ++L.t_count;
      continue;
    }
    if (nc == 0 && (g.kind == GateKind::Ry || g.kind == GateKind::Givens)) {
      ++L.rotations;
      continue;
    }
    const bool pauli_like = g.kind == GateKind::X || g.kind == GateKind::Y || g.kind == GateKind::Z ||
                            g.kind == GateKind::CNOT || g.kind == GateKind::CZ;
    const bool clifford_1q = g.kind == GateKind::H || g.kind == GateKind::S || g.kind == GateKind::Sdg;
    if ((pauli_like && nc <= 1) || (clifford_1q && nc == 0)) {
      ++L.clifford;
      continue;
    }
    ++L.other_controlled;
  }
  return L;
}

inline long long t_count(const Circuit& c) { return t_ledger(c).t_count; }

// One gate per line: kind, targets, controls (~ marks a zero-valued control),
// angle at 17 significant digits, then the AND marker if any.
inline std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "# circuit " << (c.label.empty() ? "-" : c.label) << " qubits=" << c.n_qubits
     << " gates=" << c.gates.size() << "\n";
  char buf[64];
  for (const Gate& g : c.gates) {
    os << gate_name(g.kind) << " t=";
    for (std::size_t i = 0; i < g.targets.size(); ++i) os << (i ? "," : "") << g.targets[i];
    os << " c=";
    if (g.controls.empty()) os << "-";
    for (std::size_t i = 0; i < g.controls.size(); ++i)
      os << (i ? "," : "") << (g.controls[i].value ? "" : "~") << g.controls[i].qubit;
    std::snprintf(buf, sizeof buf, "%.17g", g.angle);
    os << " a=" << buf;
    if (g.marker == AndMarker::compute) os << " and+";
    if (g.marker == AndMarker::uncompute) os << " and-";
    os << "\n";
  }
  return os.str();
}

}  // namespace sykq
