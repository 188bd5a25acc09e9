// Copyright 2026 The adlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADLP_ENUMERATOR_HPP
#define ADLP_ENUMERATOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "adlp/codes.hpp"

namespace adlp {

enum class EnumeratorKind { A, B, A_SL, B_SL };

// Length-(n+1) coefficient vector of one enumerator family. gamma is
// meaningless for the SL kinds and left at zero there.
struct EnumeratorVector {
  EnumeratorKind kind = EnumeratorKind::A;
  double gamma = 0.0;
  std::vector<double> values;  // indexed by weight 0..n
};

// phi[sigma] = tr(sigma P) over the canonical Pauli order; real since P and
// sigma are Hermitian. The tensor-square pair values phi[s]*phi[t] are read
// through pair_value, which is symmetric in (s, t) by construction, so the
// swap invariance of the tensor square never needs an explicit permutation.
struct AuxVector {
  int n = 0;
  std::vector<double> phi;  // 4^n entries

  double pair_value(std::uint32_t s, std::uint32_t t) const { return phi[s] * phi[t]; }
};

// Damping enumerators at one gamma:
//   A_i = sum_{wt(x)=i} tr(A_x P) tr(A_x^dag P) / (tr P)^2
//   B_i = sum_{wt(x)=i} tr(A_x P A_x^dag P) / tr P
// Computed through the monomial structure of A_x on basis states, never by
// dense 2^n x 2^n products; total work is O(3^n) for A and O(5^n) for B.
std::pair<EnumeratorVector, EnumeratorVector> ad_enumerators(const Code& code, double gamma);

// Pauli-weight enumerators:
//   A_SL_i = sum_{wt(sigma)=i} tr(sigma P) tr(sigma P) / M^2
//   B_SL_i = sum_{wt(sigma)=i} tr(sigma P sigma P) / M
// via codeword matrix elements <psi_k| sigma |psi_l>; n <= 8.
std::pair<EnumeratorVector, EnumeratorVector> sl_enumerators(const Code& code);

// tr(sigma P) for every Pauli string; n <= 8.
AuxVector aux_vector(const Code& code);

// Definition check: B_i - A_i <= c * gamma^(t+1) for i = 0..t.
bool is_tc_ad_code(const Code& code, int t, double c, double gamma);

}  // namespace adlp

#endif  // ADLP_ENUMERATOR_HPP
