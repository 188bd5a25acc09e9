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

#ifndef ADLP_CODES_HPP
#define ADLP_CODES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace adlp {

// Raw ((n, M)) code: M codewords of dimension 2^n, columns of `codewords`,
// amplitudes in computational-basis order with qubit 0 most significant.
struct CodeSpec {
  int n = 0;
  Eigen::MatrixXcd codewords;  // 2^n rows, M columns

  int M() const { return static_cast<int>(codewords.cols()); }
  std::uint32_t dim() const { return codewords.rows() > 0 ? static_cast<std::uint32_t>(codewords.rows()) : 0; }
};

struct CodeError : std::runtime_error {
  enum Kind { NotNormalized, NotOrthogonal, UnknownCode, BadInput };
  Kind kind;
  CodeError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// A validated code with its cached projector P = sum_k |psi_k><psi_k|.
struct Code {
  CodeSpec spec;
  Eigen::MatrixXcd projector;  // 2^n x 2^n, P^2 = P, tr P = M

  int n() const { return spec.n; }
  int M() const { return spec.M(); }
};

// Checks pairwise orthonormality to 1e-10 and caches the projector. Rejects
// bad input instead of re-orthogonalizing.
Code validate(const CodeSpec& spec);

// Built-in codes: "leung4", "shor9", "trivial-zero(n)", "trivial-one(n)".
CodeSpec builtin(const std::string& name);

// JSON interchange: { "n": int, "codewords": [[[re, im], ...], ...] }.
CodeSpec load_code_json(const std::string& path);
std::string code_to_json(const CodeSpec& spec);

}  // namespace adlp

#endif  // ADLP_CODES_HPP
