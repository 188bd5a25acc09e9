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

#ifndef ADLP_KRAUS_HPP
#define ADLP_KRAUS_HPP

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

#include "adlp/pauli.hpp"

namespace adlp {

// Amplitude damping on one qubit: A_0 = diag(1, sqrt(1-gamma)),
// A_1 = sqrt(gamma) |0><1|. An n-qubit error is the tensor product
// A_x = A_{x_1} x ... x A_{x_n} labelled by the bitstring x; its weight is
// popcount(x) and the class K_i collects the C(n,i) labels of weight i.

// Throws std::domain_error unless 0 <= gamma <= 1.
void check_gamma(double gamma);

// tr(A_a sigma) for one qubit. a=0: {I: 1+s, Z: 1-s, X: 0, Y: 0} with
// s = sqrt(1-gamma); a=1: {X: sqrt(gamma), Y: i sqrt(gamma), I: 0, Z: 0}.
std::complex<double> kernel_A(int a, int sigma, double gamma);

// tr(A_a^dag tau); the conjugate of kernel_A(a, tau, gamma) since tau is
// Hermitian.
std::complex<double> kernel_A_dagger(int a, int tau, double gamma);

// tr(A_a sigma A_a^dag tau); real for every input by cyclicity, but not
// symmetric in (sigma, tau): kernel_B(1, I, Z) = gamma while
// kernel_B(1, Z, I) = -gamma.
double kernel_B(int a, int sigma, int tau, double gamma);

// Dense oracle for A_x on n qubits, n <= kMaxDenseQubits. Bit j of x (from
// the most significant end) selects the factor on qubit j.
Eigen::MatrixXcd kraus_dense(std::uint32_t x, int n, double gamma);

}  // namespace adlp

#endif  // ADLP_KRAUS_HPP
