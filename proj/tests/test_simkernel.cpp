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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.hpp"
#include "sykq/dense.hpp"
#include "sykq/gate.hpp"
#include "sykq/pauli_string.hpp"
#include "sykq/program.hpp"
#include "sykq/rng.hpp"
#include "sykq/state_vector.hpp"

namespace {

using namespace sykq;
using oracle::Mat;

Mat oracle_gate(const Gate& g, int n) {
  std::vector<std::pair<int, bool>> ctl;
  for (const auto& c : g.controls) ctl.push_back({c.qubit, c.value});
  const double r = std::numbers::sqrt2 / 2;
  Mat u(2, 2);
  switch (g.kind) {
    case GateKind::H: u = oracle::H(); break;
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli: u = oracle::X(); break;
    case GateKind::Y: u = oracle::Y(); break;
    case GateKind::Z:
    case GateKind::CZ: u = oracle::Z(); break;
    case GateKind::S: u << 1, 0, 0, cplx(0, 1); break;
    case GateKind::Sdg: u << 1, 0, 0, cplx(0, -1); break;
    case GateKind::T: u << 1, 0, 0, cplx(r, r); break;
    case GateKind::Tdg: u << 1, 0, 0, cplx(r, -r); break;
    case GateKind::Ry: u = oracle::ry(g.angle); break;
    case GateKind::Givens: {
      // Built directly on the two-qubit span and lifted with projectors.
      const int a = g.targets[0], b = g.targets[1];
      const u64 dim = u64{1} << n;
      Mat m = Mat::Identity(dim, dim);
      const double c = std::cos(g.angle), s = std::sin(g.angle);
      for (u64 y = 0; y < dim; ++y) {
        bool fire = true;
        for (auto [q, v] : ctl) fire = fire && (((y >> q) & 1) == static_cast<u64>(v));
        if (!fire) continue;
        const bool ab = (y >> a) & 1, bb = (y >> b) & 1;
        if (ab && !bb) {
          const u64 y2 = (y ^ (u64{1} << a)) | (u64{1} << b);
          m(y, y) = c;
          m(y2, y) = s;
          m(y, y2) = -s;
          m(y2, y2) = c;
        }
      }
      return m;
    }
  }
  return oracle::controlled(u, g.targets[0], ctl, n);
}

Circuit random_circuit(int n, int count, Rng& rng, bool with_controls = true) {
  Circuit c(n, "rand");
  const GateKind kinds[] = {GateKind::H, GateKind::X,  GateKind::Y,    GateKind::Z,       GateKind::S,
                            GateKind::Sdg, GateKind::T, GateKind::Tdg, GateKind::CNOT,    GateKind::CZ,
                            GateKind::Toffoli, GateKind::Ry, GateKind::Givens};
  while (static_cast<int>(c.size()) < count) {
    const GateKind k = kinds[rng.next_u64() % 13];
    std::vector<int> qs(n);
    for (int i = 0; i < n; ++i) qs[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(qs[i], qs[rng.next_u64() % (i + 1)]);
    Gate g;
    g.kind = k;
    int used = 0;
    for (int t = 0; t < (k == GateKind::Givens ? 2 : 1); ++t) g.targets.push_back(qs[used++]);
    int nc = k == GateKind::CNOT || k == GateKind::CZ ? 1 : (k == GateKind::Toffoli ? 2 : 0);
    if (with_controls && rng.uniform() < 0.3) ++nc;
    if (used + nc > n) continue;
    for (int i = 0; i < nc; ++i) g.controls.push_back({qs[used++], rng.uniform() < 0.7});
    g.angle = (k == GateKind::Ry || k == GateKind::Givens) ? rng.uniform(-4, 4) : 0.0;
    c.add(g);
  }
  return c;
}

TEST(SimKernel, HadamardOnZero) {
  StateVector s(1);
  apply_gate(s, gates::h(0));
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(SimKernel, XOnZero) {
  StateVector s(1);
  apply_gate(s, gates::x(0));
  EXPECT_EQ(s[0], cplx(0, 0));
  EXPECT_EQ(s[1], cplx(1, 0));
}

TEST(SimKernel, GivensSignConvention) {
  const double th = 0.7;
  StateVector s = StateVector::basis(2, 1);  // qubit 0 set
  apply_gate(s, gates::givens(0, 1, th));
  EXPECT_NEAR(std::abs(s[1] - std::cos(th)), 0, 1e-15);
  EXPECT_NEAR(std::abs(s[2] - std::sin(th)), 0, 1e-15);
  // Full 4x4 against direct construction; orthogonal and real.
  Mat direct = Mat::Identity(4, 4);
  direct(1, 1) = std::cos(th);
  direct(2, 1) = std::sin(th);
  direct(1, 2) = -std::sin(th);
  direct(2, 2) = std::cos(th);
  const Mat m = circuit_matrix([&] {
    Circuit c(2);
    c.add(gates::givens(0, 1, th));
    return c;
  }());
  EXPECT_LT(max_abs(m - direct), 1e-15);
  EXPECT_LT(max_abs(m.transpose() * m - Mat::Identity(4, 4)), 1e-15);
  EXPECT_LT(m.imag().cwiseAbs().maxCoeff(), 1e-15);
}

TEST(SimKernel, EveryGateMatchesKroneckerOracle) {
  Rng rng(11);
  const int n = 4;
  for (int rep = 0; rep < 400; ++rep) {
    const Circuit c = random_circuit(n, 1, rng);
    const Mat got = circuit_matrix(c);
    const Mat want = oracle_gate(c.gates[0], n);
    ASSERT_LT(max_abs(got - want), 1e-14) << to_text(c);
  }
}

TEST(SimKernel, RunThenAdjointRestoresState) {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + rep % 8;
    const Circuit c = random_circuit(n, 150, rng);
    StateVector s = StateVector::random(n, rng);
    const StateVector s0 = s;
    run_circuit(s, c);
    run_circuit(s, adjoint(c));
    EXPECT_LT(max_abs_diff(s, s0), 1e-10);
  }
}

TEST(SimKernel, DoubleAdjointIsIdentical) {
  Rng rng(6);
  const Circuit c = random_circuit(6, 300, rng);
  EXPECT_TRUE(adjoint(adjoint(c)) == c);
  EXPECT_EQ(to_text(adjoint(adjoint(c))), to_text(c));
}

TEST(SimKernel, NormPreservedOverLongCircuit) {
  Rng rng(9);
  const Circuit c = random_circuit(14, 10000, rng);
  StateVector s = StateVector::random(14, rng);
  run_circuit(s, c);
  EXPECT_NEAR(s.norm(), 1.0, 1e-9);
}

TEST(SimKernel, EmptyCircuitIsIdentity) {
  Rng rng(3);
  StateVector s = StateVector::random(5, rng);
  const StateVector s0 = s;
  run_circuit(s, Circuit(5));
  EXPECT_EQ(max_abs_diff(s, s0), 0.0);
}

TEST(SimKernel, RejectsBadInput) {
  StateVector s(2);
  EXPECT_THROW(apply_gate(s, gates::x(2)), std::out_of_range);
  EXPECT_THROW(apply_gate(s, gates::cnot(1, 1)), std::invalid_argument);
  StateVector bad(2, {cplx(2, 0), 0, 0, 0});
  EXPECT_THROW(apply_gate(bad, gates::x(0)), std::invalid_argument);
  Circuit c(3);
  EXPECT_THROW(run_circuit(s, c), std::invalid_argument);
  EXPECT_THROW(StateVector(2, std::vector<cplx>(3)), std::invalid_argument);
}

TEST(PauliString, XAndZOnBasisStates) {
  StateVector s(2);
  apply_pauli_string(s, PauliString::parse("IX"));
  EXPECT_EQ(s[1], cplx(1, 0));
  StateVector t = StateVector::basis(2, 1);
  apply_pauli_string(t, PauliString::parse("IZ"));
  EXPECT_EQ(t[1], cplx(-1, 0));
}

TEST(PauliString, DenseMatchesKronecker) {
  const PauliString p = PauliString::parse("XZZ");
  EXPECT_LT(max_abs(pauli_matrix(p) - oracle::pauli_word("XZZ")), 1e-15);
  Rng rng(2);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (int rep = 0; rep < 200; ++rep) {
    std::string w;
    for (int k = 0; k < 5; ++k) w += letters[rng.next_u64() % 4];
    const int ph = static_cast<int>(rng.next_u64() % 4);
    const PauliString ps = PauliString::parse((ph >= 2 ? "-" : "+") + std::string(ph % 2 ? "i" : "") + w);
    const Mat want = i_pow(ph) * oracle::pauli_word(w);
    ASSERT_LT(max_abs(pauli_matrix(ps) - want), 1e-15) << ps.to_string();
    StateVector s = StateVector::random(5, rng);
    Eigen::Map<Eigen::VectorXcd> v(s.amplitudes().data(), 32);
    const Eigen::VectorXcd expect = want * v;
    apply_pauli_string(s, ps);
    ASSERT_LT((v - expect).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PauliString, ProductMatchesMatrixProduct) {
  Rng rng(4);
  for (int rep = 0; rep < 300; ++rep) {
    const PauliString a(4, rng.next_u64() % 16, rng.next_u64() % 16, static_cast<int>(rng.next_u64() % 4));
    const PauliString b(4, rng.next_u64() % 16, rng.next_u64() % 16, static_cast<int>(rng.next_u64() % 4));
    ASSERT_LT(max_abs(pauli_matrix(a * b) - pauli_matrix(a) * pauli_matrix(b)), 1e-15);
    const PauliString sq = a * a;
    EXPECT_EQ(sq.x_mask(), 0u);
    EXPECT_EQ(sq.z_mask(), 0u);
    EXPECT_EQ(sq.phase_exp(), a.is_hermitian() ? 0 : 2);
    EXPECT_EQ(a.commutes_with(b), max_abs(pauli_matrix(a * b) - pauli_matrix(b * a)) < 1e-15);
  }
}

TEST(PauliString, WidthMismatchThrows) {
  StateVector s(3);
  EXPECT_THROW(apply_pauli_string(s, PauliString::parse("XX")), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("XX") * PauliString::parse("X"), std::invalid_argument);
}

TEST(ExtractOperator, IdentityAndAncillaFlip) {
  const Partition part{3, {0, 1}, {2}};
  const StateVector zero(1);
  const Mat id = extract_operator(Circuit(3), part, zero, zero);
  EXPECT_LT(max_abs(id - Mat::Identity(4, 4)), 1e-15);
  Circuit c(3);
  c.add(gates::x(2));
  EXPECT_LT(max_abs(extract_operator(c, part, zero, zero)), 1e-15);
  EXPECT_THROW(extract_operator(c, part, StateVector(2), zero), std::invalid_argument);
}

TEST(ExtractOperator, SubNormalized) {
  Rng rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    const Circuit c = random_circuit(6, 80, rng);
    const Partition part{6, {0, 1, 2}, {3, 4, 5}};
    const StateVector anc = StateVector::random(3, rng);
    const Mat m = extract_operator(c, part, anc, anc);
    EXPECT_LE(spectral_norm(m), 1.0 + 1e-10);
  }
}

TEST(ExactExpm, Basics) {
  EXPECT_LT(max_abs(exact_expm(oracle::Z(), 0.0) - Mat::Identity(2, 2)), 1e-15);
  Mat want = Mat::Zero(2, 2);
  want(0, 0) = std::exp(cplx(0, -std::numbers::pi / 2));
  want(1, 1) = std::exp(cplx(0, std::numbers::pi / 2));
  EXPECT_LT(max_abs(exact_expm(oracle::Z(), std::numbers::pi / 2) - want), 1e-15);
  Mat nh = Mat::Zero(2, 2);
  nh(0, 1) = 1.0;
  EXPECT_THROW(exact_expm(nh, 1.0), std::invalid_argument);
}

TEST(ExactExpm, GroupPropertyAndTaylorOracle) {
  Rng rng(12);
  Mat a(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
  const Mat h = (a + a.adjoint()) / 2.0;
  const Mat u1 = exact_expm(h, 0.3), u2 = exact_expm(h, 1.1), u12 = exact_expm(h, 1.4);
  EXPECT_LT(max_abs(u1 * u2 - u12), 1e-10);
  EXPECT_LT(unitarity_error(u12), 1e-10);
  EXPECT_LT(max_abs(u12 - oracle::expm_taylor(h, 1.4)), 1e-10);
}

TEST(BasisTracker, MatchesDenseForMonomialCircuits) {
  Rng rng(13);
  const GateKind mono[] = {GateKind::X, GateKind::Y, GateKind::Z, GateKind::S, GateKind::T,
                           GateKind::Tdg, GateKind::CNOT, GateKind::CZ, GateKind::Toffoli};
  Circuit c(5);
  for (int k = 0; k < 60; ++k) {
    Circuit one = random_circuit(5, 1, rng);
    Gate g = one.gates[0];
    bool ok = false;
    for (GateKind m : mono) ok = ok || g.kind == m;
    if (ok) c.add(g);
  }
  const Mat m = circuit_matrix(c);
  for (u64 y = 0; y < 32; ++y) {
    BasisTerm b{y, 1.0};
    run_circuit(b, c);
    EXPECT_LT(std::abs(m(b.index, y) - b.amp), 1e-14);
    EXPECT_NEAR(std::abs(m(b.index, y)), 1.0, 1e-14);
  }
  BasisTerm b{0, 1.0};
  EXPECT_THROW(apply_gate(b, gates::h(0)), std::invalid_argument);
}

TEST(Program, HouseholderPreparesAmplitudesAndIsInvolution) {
  Rng rng(14);
  std::vector<double> a(8);
  double nrm = 0;
  for (auto& x : a) {
    x = rng.normal();
    nrm += x * x;
  }
  for (auto& x : a) x /= std::sqrt(nrm);
  Program p(5);
  p.add(HouseholderPrep{1, 3, a, std::nullopt});
  StateVector s(5);
  run_program(s, p);
  for (u64 l = 0; l < 8; ++l) EXPECT_NEAR(s[l << 1].real(), a[l], 1e-14);
  const Mat m = program_matrix(p);
  EXPECT_LT(max_abs(m * m - Mat::Identity(32, 32)), 1e-13);
  EXPECT_LT(max_abs(m - m.transpose()), 1e-14);

  Program pc(5);
  pc.add(HouseholderPrep{1, 3, a, Control{0, false}});
  StateVector one = StateVector::basis(5, 1);
  run_program(one, pc);
  EXPECT_EQ(one[1], cplx(1, 0));
}

TEST(Program, ZeroReflection) {
  Program p(3);
  p.add(ZeroReflection{{0, 2}});
  const Mat m = program_matrix(p);
  for (u64 y = 0; y < 8; ++y) EXPECT_EQ(m(y, y).real(), (y & 5) ? -1.0 : 1.0);
}

TEST(Program, AdjointAndFlatten) {
  Rng rng(15);
  Program p(4);
  p.add(random_circuit(4, 20, rng));
  p.add(ZeroReflection{{1}});
  p.add(random_circuit(4, 20, rng));
  const Mat m = program_matrix(p);
  EXPECT_LT(max_abs(program_matrix(adjoint(p)) - m.adjoint()), 1e-13);
  EXPECT_THROW(flatten(p), std::invalid_argument);
  Program q(4);
  q.add(random_circuit(4, 5, rng));
  q.add(random_circuit(4, 5, rng));
  EXPECT_EQ(flatten(q).size(), 10u);
}

TEST(Gate, TextExportIsStable) {
  Circuit c(3, "demo");
  c.add(gates::toffoli({0, true}, {1, false}, 2, AndMarker::compute));
  c.add(gates::ry(1, 0.5));
  EXPECT_EQ(to_text(c),
            "# circuit demo qubits=3 gates=2\n"
            "TOFFOLI t=2 c=0,~1 a=0 and+\n"
            "RY t=1 c=- a=0.5\n");
}

}  // namespace
