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

#include "adlp/pauli.hpp"

#include <stdexcept>

namespace adlp {

namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count out of range: " + std::to_string(n));
  }
}

constexpr char kLetterChars[4] = {'I', 'X', 'Y', 'Z'};

}  // namespace

PauliString PauliString::identity(int n) {
  check_n(n);
  PauliString p;
  p.n = n;
  p.letters.assign(static_cast<std::size_t>(n), kI);
  return p;
}

PauliString PauliString::from_index(std::uint32_t index, int n) {
  check_n(n);
  if (index >= pauli_count(n)) {
    throw std::out_of_range("pauli index out of range");
  }
  PauliString p;
  p.n = n;
  p.letters.resize(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    p.letters[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(index & 3u);
    index >>= 2;
  }
  return p;
}

PauliString PauliString::from_string(const std::string& s) {
  PauliString p;
  p.n = static_cast<int>(s.size());
  check_n(p.n);
  p.letters.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'I': p.letters.push_back(kI); break;
      case 'X': p.letters.push_back(kX); break;
      case 'Y': p.letters.push_back(kY); break;
      case 'Z': p.letters.push_back(kZ); break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter: ") + c);
    }
  }
  return p;
}

std::uint32_t PauliString::index() const {
  std::uint32_t idx = 0;
  for (int j = 0; j < n; ++j) {
    idx = (idx << 2) | letters[static_cast<std::size_t>(j)];
  }
  return idx;
}

int PauliString::weight() const {
  int w = 0;
  for (std::uint8_t l : letters) w += (l != kI);
  return w;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters.size());
  for (std::uint8_t l : letters) s.push_back(kLetterChars[l]);
  return s;
}

std::uint32_t pauli_count(int n) {
  check_n(n);
  return 1u << (2 * n);
}

int pauli_index_weight(std::uint32_t index, int n) {
  int w = 0;
  for (int j = 0; j < n; ++j) {
    w += ((index & 3u) != 0);
    index >>= 2;
  }
  return w;
}

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
  if (p.n > kMaxDenseQubits) {
    throw std::length_error("dense_matrix limited to 10 qubits");
  }
  using cd = std::complex<double>;
  static const Eigen::Matrix2cd kSingle[4] = {
      (Eigen::Matrix2cd() << cd(1, 0), cd(0, 0), cd(0, 0), cd(1, 0)).finished(),
      (Eigen::Matrix2cd() << cd(0, 0), cd(1, 0), cd(1, 0), cd(0, 0)).finished(),
      (Eigen::Matrix2cd() << cd(0, 0), cd(0, -1), cd(0, 1), cd(0, 0)).finished(),
      (Eigen::Matrix2cd() << cd(1, 0), cd(0, 0), cd(0, 0), cd(-1, 0)).finished(),
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  // Qubit 0 must end up as the outermost Kronecker factor, so build inside out.
  for (int j = p.n - 1; j >= 0; --j) {
    const Eigen::Matrix2cd& f = kSingle[p.letters[static_cast<std::size_t>(j)]];
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = f(r, c) * out;
      }
    }
    out.swap(next);
  }
  return out;
}

}  // namespace adlp
