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

#include "oracle.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace oracle {

double GaussianSource::next() {
  const double u = ((rng_() >> 11) + 0.5) * 0x1p-53;
  const double v = ((rng_() >> 11) + 0.5) * 0x1p-53;
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

adlp::Code random_code(int n, int M, GaussianSource& gauss) {
  const int dim = 1 << n;
  Eigen::MatrixXcd g(dim, M);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = std::complex<double>(gauss.next(), gauss.next());
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  adlp::CodeSpec spec;
  spec.n = n;
  spec.codewords = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, M);
  return adlp::validate(spec);
}

// Exact closed forms for the four-qubit code, obtained by symbolic expansion of
// the definitions over the 16 Kraus labels: A_0 = (1 - g/2)^4, A_4 = g^4/16,
// B_0 = A_0 + g^4/16, B_2 = (g^2/4)(1 + (1-g)^2), B_4 = g^4/8, rest zero.
std::array<double, 5> leung4_A(double g) {
  const double g2 = g * g, g3 = g2 * g, g4 = g3 * g;
  return {g4 / 16 - g3 / 2 + 3 * g2 / 2 - 2 * g + 1, 0.0, 0.0, 0.0, g4 / 16};
}

std::array<double, 5> leung4_B(double g) {
  const double g2 = g * g, g3 = g2 * g, g4 = g3 * g;
  return {g4 / 8 - g3 / 2 + 3 * g2 / 2 - 2 * g + 1, 0.0, g4 / 4 - g3 / 2 + g2 / 2,
          0.0, g4 / 8};
}

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int j = 0; j < k; ++j) v = v * (n - j) / (j + 1);
  return v;
}

}  // namespace oracle
