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

// Builds a small SYK instance, block-encodes it, and compares the encoded
// operator and one walk step against dense references.

#include <cstdio>

#include "sykq/sykq.hpp"

int main() {
  using namespace sykq;
  const SykInstance inst = sample_couplings(6, 1.0, IndexMode::distinct_sorted, 42);
  const BlockEncoding enc = encode_exact(inst);
  std::printf("N=%d terms=%zu qubits=%d lambda=%.6f (estimate %.6f)\n", inst.n, inst.terms.size(), enc.layout.total,
              enc.lambda, lambda_estimate(inst.n, inst.j));

  const DenseOperator h = assemble_hamiltonian(inst);
  const DenseOperator block = encoded_block(enc);
  std::printf("max |lambda <G|U|G> - H| = %.3e\n", max_abs(enc.lambda * block - h));

  const WalkOperator w = make_walk(enc);
  const auto proj = chebyshev_projections(w, 4);
  const auto ref = chebyshev_first_kind(block, 4);
  for (int n = 0; n <= 4; ++n) std::printf("n=%d  |<G|W^n|G> - T_n| = %.3e\n", n, spectral_norm(proj[n] - ref[n]));

  const Circuit v = build_select_gates(RegisterLayout::make(8, IndexMode::all_tuples, true));
  const TLedger t = t_ledger(v);
  std::printf("gate-level select, N=8: %lld gates, T-count %lld (16N-16 = %lld)\n",
              static_cast<long long>(v.size()), t.t_count, select_t_count(8));
  return 0;
}
