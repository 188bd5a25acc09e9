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

#ifndef ADLP_PAULI_HPP
#define ADLP_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace adlp {

// Single-qubit Pauli letters in canonical order. The integer values are the
// base-4 digits used everywhere: index(p) = sum_j letter_j * 4^(n-1-j), so
// qubit 0 is the most significant digit.
enum PauliLetter : std::uint8_t { kI = 0, kX = 1, kY = 2, kZ = 3 };

constexpr int kMaxQubits = 12;       // index arithmetic stays in 32 bits
constexpr int kMaxDenseQubits = 10;  // dense oracles allocate 2^n x 2^n

// An n-qubit tensor product of {I,X,Y,Z}. Plain value type; letters[j] is the
// factor acting on qubit j.
struct PauliString {
  int n = 0;
  std::vector<std::uint8_t> letters;

  static PauliString identity(int n);
  static PauliString from_index(std::uint32_t index, int n);
  static PauliString from_string(const std::string& s);

  std::uint32_t index() const;
  int weight() const;
  std::string str() const;
};

// Number of Pauli strings on n qubits: 4^n.
std::uint32_t pauli_count(int n);

// Weight of the Pauli string with the given canonical index.
int pauli_index_weight(std::uint32_t index, int n);

// Dense matrix oracle, n <= kMaxDenseQubits. Hermitian and unitary.
Eigen::MatrixXcd dense_matrix(const PauliString& p);

}  // namespace adlp

#endif  // ADLP_PAULI_HPP
