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

#ifndef ADLP_TESTS_ORACLE_HPP
#define ADLP_TESTS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <random>

#include "adlp/codes.hpp"

namespace oracle {

// Deterministic Gaussian stream: Box-Muller over raw 64-bit draws, so the
// values do not depend on the standard library's distribution internals.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}
  double next();

 private:
  std::mt19937_64 rng_;
};

// Haar-ish random ((n, M)) code from a QR factorization of a Gaussian block.
adlp::Code random_code(int n, int M, GaussianSource& gauss);

// Closed-form enumerators of the four-qubit two-codeword code, A_0..A_4 and
// B_0..B_4 as polynomials in gamma.
std::array<double, 5> leung4_A(double gamma);
std::array<double, 5> leung4_B(double gamma);

double binom(int n, int k);

}  // namespace oracle

#endif  // ADLP_TESTS_ORACLE_HPP
