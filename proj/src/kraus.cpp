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

#include "adlp/kraus.hpp"

#include <cmath>
#include <stdexcept>

namespace adlp {

void check_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::domain_error("gamma outside [0, 1]");
  }
}

std::complex<double> kernel_A(int a, int sigma, double gamma) {
  check_gamma(gamma);
  const double s = std::sqrt(1.0 - gamma);
  if (a == 0) {
    switch (sigma) {
      case kI: return {1.0 + s, 0.0};
      case kZ: return {1.0 - s, 0.0};
      default: return {0.0, 0.0};
    }
  }
  const double r = std::sqrt(gamma);
  switch (sigma) {
    case kX: return {r, 0.0};
    case kY: return {0.0, r};
    default: return {0.0, 0.0};
  }
}

std::complex<double> kernel_A_dagger(int a, int tau, double gamma) {
  return std::conj(kernel_A(a, tau, gamma));
}

double kernel_B(int a, int sigma, int tau, double gamma) {
  check_gamma(gamma);
  if (a == 0) {
    const double s = std::sqrt(1.0 - gamma);
    if (sigma == tau) {
      switch (sigma) {
        case kI:
        case kZ: return 2.0 - gamma;  // 1 + s^2
        default: return 2.0 * s;
      }
    }
    if ((sigma == kI && tau == kZ) || (sigma == kZ && tau == kI)) return gamma;  // 1 - s^2
    return 0.0;
  }
  // A_1 sigma A_1^dag = gamma <1|sigma|1> |0><0|, so only the (0,0) entry of
  // tau survives and X/Y drop out on either slot.
  const bool sig_diag = (sigma == kI || sigma == kZ);
  const bool tau_diag = (tau == kI || tau == kZ);
  if (!sig_diag || !tau_diag) return 0.0;
  return (sigma == kZ ? -gamma : gamma);
}

Eigen::MatrixXcd kraus_dense(std::uint32_t x, int n, double gamma) {
  check_gamma(gamma);
  if (n < 1 || n > kMaxDenseQubits) {
    throw std::length_error("kraus_dense limited to 10 qubits");
  }
  using cd = std::complex<double>;
  const double s = std::sqrt(1.0 - gamma);
  const double r = std::sqrt(gamma);
  Eigen::Matrix2cd a0;
  a0 << cd(1, 0), cd(0, 0), cd(0, 0), cd(s, 0);
  Eigen::Matrix2cd a1;
  a1 << cd(0, 0), cd(r, 0), cd(0, 0), cd(0, 0);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  // Qubit 0 must end up as the outermost Kronecker factor, so build inside out.
  for (int j = n - 1; j >= 0; --j) {
    const bool bit = (x >> (n - 1 - j)) & 1u;
    const Eigen::Matrix2cd& f = bit ? a1 : a0;
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int row = 0; row < 2; ++row) {
      for (int col = 0; col < 2; ++col) {
        next.block(row * out.rows(), col * out.cols(), out.rows(), out.cols()) = f(row, col) * out;
      }
    }
    out.swap(next);
  }
  return out;
}

}  // namespace adlp
