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

#include "oracle.hpp"
#include "sykq/dense.hpp"
#include "sykq/syk_model.hpp"

namespace {

using namespace sykq;
using oracle::Mat;

Mat oracle_hamiltonian(const SykInstance& inst) {
  const int d = 1 << inst.n;
  Mat h = Mat::Zero(d, d);
  for (const auto& t : inst.terms)
    h += t.w * oracle::majorana(t.idx[0], inst.n) * oracle::majorana(t.idx[1], inst.n) *
         oracle::majorana(t.idx[2], inst.n) * oracle::majorana(t.idx[3], inst.n);
  double pad = 0.0;
  for (double w : inst.padding_weights) pad += w;
  return h + pad * Mat::Identity(d, d);
}

TEST(Couplings, Variance) {
  EXPECT_DOUBLE_EQ(coupling_variance(8, 1.0), 0.01171875);
  EXPECT_DOUBLE_EQ(coupling_variance(4, 2.0), 4 * 6.0 / 64.0);
  EXPECT_EQ(coupling_variance(8, 0.0), 0.0);
}

TEST(Couplings, ZeroJGivesZeroWeights) {
  const SykInstance inst = sample_couplings(6, 0.0, IndexMode::distinct_sorted, 3);
  ASSERT_EQ(inst.terms.size(), 15u);
  for (const auto& t : inst.terms) EXPECT_EQ(t.w, 0.0);
}

TEST(Couplings, DomainSizesAndOrder) {
  EXPECT_EQ(sample_couplings(8, 1, IndexMode::distinct_sorted, 1).terms.size(), 70u);
  EXPECT_EQ(sample_couplings(4, 1, IndexMode::all_tuples, 1).terms.size(), 256u);
  EXPECT_EQ(sample_couplings(8, 1, IndexMode::distinct_sorted, 1).padding_weights.size(), 58u);
  const auto tuples = enumerate_tuples(6, IndexMode::distinct_sorted);
  for (std::size_t k = 1; k < tuples.size(); ++k) EXPECT_LT(tuples[k - 1], tuples[k]);
  for (const auto& t : tuples) EXPECT_TRUE(t[0] < t[1] && t[1] < t[2] && t[2] < t[3]);
}

TEST(Couplings, SameSeedSameInstance) {
  const auto a = sample_couplings(8, 1, IndexMode::distinct_sorted, 42);
  const auto b = sample_couplings(8, 1, IndexMode::distinct_sorted, 42);
  const auto c = sample_couplings(8, 1, IndexMode::distinct_sorted, 43);
  EXPECT_EQ(slot_weights(a), slot_weights(b));
  EXPECT_NE(slot_weights(a), slot_weights(c));
}

TEST(Couplings, EnsembleVarianceOverFiftySeeds) {
  // J_pqrs = 96 w should have variance 3! J^2 / N^3.
  double s2 = 0.0, s1 = 0.0;
  std::size_t count = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (const auto& t : sample_couplings(8, 1.0, IndexMode::all_tuples, seed).terms) {
      s1 += 96.0 * t.w;
      s2 += 96.0 * 96.0 * t.w * t.w;
      ++count;
    }
  }
  const double var = s2 / count - (s1 / count) * (s1 / count);
  EXPECT_NEAR(var / coupling_variance(8, 1.0), 1.0, 0.05);
}

TEST(Couplings, RejectsBadN) {
  EXPECT_THROW(sample_couplings(3, 1, IndexMode::distinct_sorted, 1), std::invalid_argument);
  EXPECT_THROW(sample_couplings(6, 1, IndexMode::all_tuples, 1), std::invalid_argument);
  EXPECT_THROW(sample_couplings(64, 1, IndexMode::distinct_sorted, 1), std::invalid_argument);
  EXPECT_THROW(parse_index_mode("sorted"), std::invalid_argument);
  EXPECT_EQ(parse_index_mode(to_string(IndexMode::all_tuples)), IndexMode::all_tuples);
}

TEST(Majorana, MatchesKroneckerAndAnticommutes) {
  for (int n : {1, 2, 4, 6}) {
    for (int a = 0; a < n; ++a) {
      const Mat ga = pauli_matrix(majorana_pauli(a, n));
      ASSERT_LE((ga - oracle::majorana(a, n)).cwiseAbs().maxCoeff(), 0.0);
      for (int b = 0; b < n; ++b) {
        const Mat gb = pauli_matrix(majorana_pauli(b, n));
        const Mat anti = ga * gb + gb * ga;
        const Mat want = (a == b ? 2.0 : 0.0) * Mat::Identity(ga.rows(), ga.cols());
        EXPECT_LE((anti - want).cwiseAbs().maxCoeff(), 1e-14) << a << "," << b;
      }
    }
  }
  for (int a = 0; a < 8; ++a)
    EXPECT_LE((pauli_matrix(majorana_pauli(a, 8)) - oracle::majorana(a, 8)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(majorana_pauli(2, 4).to_string(), "+IXZZ");
  EXPECT_THROW(majorana_pauli(4, 4), std::out_of_range);
}

TEST(Majorana, TermStrings) {
  // A repeated index collapses to a product of two Majoranas, which is anti-Hermitian.
  const PauliString rep = term_string(0, 0, 1, 2, 4);
  EXPECT_FALSE(rep.is_hermitian());
  const Mat m = pauli_matrix(rep);
  EXPECT_LE((m + m.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((m - oracle::majorana(1, 4) * oracle::majorana(2, 4)).cwiseAbs().maxCoeff(), 1e-14);

  for (const auto& t : enumerate_tuples(6, IndexMode::distinct_sorted)) {
    const PauliString p = term_string(t[0], t[1], t[2], t[3], 6);
    EXPECT_TRUE(p.is_hermitian());
    EXPECT_EQ((p * p).to_string(), "+IIIIII");
  }
}

TEST(Majorana, SingleTermSpectrumIsPlusMinusOne) {
  SykInstance inst{6, 1.0, IndexMode::distinct_sorted, 0, {{{0, 2, 3, 5}, 1.0}}, {}};
  const Mat h = assemble_hamiltonian(inst);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  for (int k = 0; k < 64; ++k) EXPECT_NEAR(std::abs(es.eigenvalues()(k)), 1.0, 1e-12);
  EXPECT_NEAR(es.eigenvalues().sum(), 0.0, 1e-12);
}

TEST(Hamiltonian, MatchesKroneckerAssembly) {
  const auto ds = sample_couplings(6, 1.0, IndexMode::distinct_sorted, 5);
  EXPECT_LE((assemble_hamiltonian(ds) - oracle_hamiltonian(ds)).cwiseAbs().maxCoeff(), 1e-14);
  const auto at = sample_couplings(4, 1.0, IndexMode::all_tuples, 5);
  EXPECT_LE((assemble_hamiltonian(at) - oracle_hamiltonian(at)).cwiseAbs().maxCoeff(), 1e-14);
  std::vector<double> w(16, 0.0);
  w[1] = 0.5;
  w[15] = 0.25;  // padding slot: identity
  const auto pad = instance_from_slot_weights(6, 1.0, IndexMode::distinct_sorted, 0, w);
  EXPECT_LE((assemble_hamiltonian(pad) - oracle_hamiltonian(pad)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_NEAR(assemble_hamiltonian(pad).trace().real(), 0.25 * 64, 1e-12);
}

TEST(Hamiltonian, HermiticityDefect) {
  EXPECT_LE(hermiticity_defect(sample_couplings(6, 1.0, IndexMode::distinct_sorted, 2)), 1e-15);
  EXPECT_GT(hermiticity_defect(sample_couplings(4, 1.0, IndexMode::all_tuples, 2)), 1e-3);
  EXPECT_THROW(assemble_hamiltonian(sample_couplings(16, 1.0, IndexMode::distinct_sorted, 1)), std::invalid_argument);
}

TEST(Lambda, UniformWeightsSaturateCauchySchwarz) {
  const double c = -0.125;
  const auto inst = instance_from_slot_weights(6, 1.0, IndexMode::distinct_sorted, 0, std::vector<double>(16, c));
  EXPECT_NEAR(lambda_exact(inst), 16 * std::abs(c), 1e-14);
  EXPECT_NEAR(sum_abs_weights(inst), lambda_exact(inst), 1e-14);
}

TEST(Lambda, CauchySchwarzBound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (auto [n, mode] : {std::pair{6, IndexMode::distinct_sorted}, std::pair{8, IndexMode::distinct_sorted},
                           std::pair{4, IndexMode::all_tuples}, std::pair{8, IndexMode::all_tuples}}) {
      const auto inst = sample_couplings(n, 1.0, mode, seed);
      EXPECT_LE(sum_abs_weights(inst), lambda_exact(inst));
    }
  }
}

TEST(Lambda, EnsembleMeanAtEightModes) {
  // All-tuples: lambda = sqrt(L sum w^2) with L = N^4 tends to N^(5/2) J sqrt(6) / 96.
  const double target = std::pow(8.0, 2.5) * std::sqrt(6.0) / 96.0;
  EXPECT_NEAR(target, 4.6189, 1e-4);
  double s = 0.0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) s += lambda_exact(sample_couplings(8, 1.0, IndexMode::all_tuples, seed));
  EXPECT_NEAR(s / 10 / target, 1.0, 0.03);
}

TEST(Lambda, ZeroCouplingsGiveZero) {
  EXPECT_EQ(lambda_exact(sample_couplings(6, 0.0, IndexMode::distinct_sorted, 1)), 0.0);
  SykInstance empty;
  empty.n = 4;
  EXPECT_THROW(lambda_exact(empty), std::invalid_argument);
}

TEST(Layout, QubitMapAndSlotDecoding) {
  const auto L = RegisterLayout::make(4, IndexMode::all_tuples, true);
  EXPECT_EQ(L.index_first, 4);
  EXPECT_EQ(L.index_count, 8);
  EXPECT_EQ(L.select_count, 4);
  EXPECT_EQ(L.flag, 16);
  EXPECT_EQ(L.total, 17);
  EXPECT_EQ(L.sub_qubit(3, 1), 4 + 7);  // p field is highest
  const std::array<int, 4> want{1, 2, 3, 0};
  EXPECT_EQ(L.slot_tuple(((1 * 4 + 2) * 4 + 3) * 4 + 0), want);

  const auto D = RegisterLayout::make(6, IndexMode::distinct_sorted, false);
  EXPECT_EQ(D.index_count, 4);
  EXPECT_EQ(D.total, 11);
  const std::array<int, 4> first{0, 1, 2, 3}, pad{-1, -1, -1, -1};
  EXPECT_EQ(D.slot_tuple(0), first);
  EXPECT_EQ(D.slot_tuple(15), pad);
  EXPECT_THROW(RegisterLayout::make(6, IndexMode::distinct_sorted, true), std::invalid_argument);
}

}  // namespace
