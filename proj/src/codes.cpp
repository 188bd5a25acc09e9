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

#include "adlp/codes.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adlp/pauli.hpp"

namespace adlp {

namespace {

constexpr double kOrthoTol = 1e-10;

// Parses "trivial-zero(4)" style names; returns -1 when the pattern does not
// match.
int parse_trivial_n(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return -1;
  const std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (inner.empty()) return -1;
  for (char c : inner) {
    if (c < '0' || c > '9') return -1;
  }
  return std::stoi(inner);
}

CodeSpec basis_state_code(int n, bool ones) {
  CodeSpec spec;
  spec.n = n;
  const std::uint32_t dim = 1u << n;
  spec.codewords = Eigen::MatrixXcd::Zero(dim, 1);
  spec.codewords(ones ? dim - 1 : 0, 0) = 1.0;
  return spec;
}

CodeSpec leung4() {
  CodeSpec spec;
  spec.n = 4;
  spec.codewords = Eigen::MatrixXcd::Zero(16, 2);
  const double r = 1.0 / std::sqrt(2.0);
  spec.codewords(0b0000, 0) = r;
  spec.codewords(0b1111, 0) = r;
  spec.codewords(0b0011, 1) = r;
  spec.codewords(0b1100, 1) = r;
  return spec;
}

CodeSpec shor9() {
  CodeSpec spec;
  spec.n = 9;
  spec.codewords = Eigen::MatrixXcd::Zero(512, 2);
  // (|000> +- |111>)^x3 / 2^(3/2); blocks are qubits (0,1,2), (3,4,5), (6,7,8).
  const double r = 1.0 / std::sqrt(8.0);
  for (int b0 = 0; b0 < 2; ++b0) {
    for (int b1 = 0; b1 < 2; ++b1) {
      for (int b2 = 0; b2 < 2; ++b2) {
        const std::uint32_t basis = static_cast<std::uint32_t>(b0 * 0b111000000 + b1 * 0b111000 + b2 * 0b111);
        spec.codewords(basis, 0) += r;
        const double sign = ((b0 + b1 + b2) % 2 == 0) ? 1.0 : -1.0;
        spec.codewords(basis, 1) += sign * r;
      }
    }
  }
  return spec;
}

}  // namespace

Code validate(const CodeSpec& spec) {
  if (spec.n < 1 || spec.n > kMaxDenseQubits) {
    throw CodeError(CodeError::BadInput, "qubit count out of range");
  }
  const std::uint32_t dim = 1u << spec.n;
  if (spec.codewords.rows() != dim || spec.codewords.cols() < 1) {
    throw CodeError(CodeError::BadInput, "codeword matrix has wrong shape");
  }
  const int M = spec.M();
  for (int k = 0; k < M; ++k) {
    const double norm = spec.codewords.col(k).norm();
    if (std::abs(norm - 1.0) > kOrthoTol) {
      std::ostringstream os;
      os << "codeword " << k << " has norm " << norm;
      throw CodeError(CodeError::NotNormalized, os.str());
    }
  }
  for (int k = 0; k < M; ++k) {
    for (int l = k + 1; l < M; ++l) {
      const std::complex<double> ip = spec.codewords.col(k).dot(spec.codewords.col(l));
      if (std::abs(ip) > kOrthoTol) {
        std::ostringstream os;
        os << "codewords " << k << " and " << l << " have inner product " << std::abs(ip);
        throw CodeError(CodeError::NotOrthogonal, os.str());
      }
    }
  }
  Code code;
  code.spec = spec;
  code.projector = spec.codewords * spec.codewords.adjoint();
  return code;
}

CodeSpec builtin(const std::string& name) {
  if (name == "leung4") return leung4();
  if (name == "shor9") return shor9();
  if (int n = parse_trivial_n(name, "trivial-zero"); n > 0) return basis_state_code(n, false);
  if (int n = parse_trivial_n(name, "trivial-one"); n > 0) return basis_state_code(n, true);
  throw CodeError(CodeError::UnknownCode, "unknown builtin code: " + name);
}

CodeSpec load_code_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CodeError(CodeError::BadInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CodeError(CodeError::BadInput, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("codewords")) {
    throw CodeError(CodeError::BadInput, "code JSON needs fields n and codewords");
  }
  CodeSpec spec;
  spec.n = j["n"].get<int>();
  if (spec.n < 1 || spec.n > kMaxDenseQubits) {
    throw CodeError(CodeError::BadInput, "qubit count out of range");
  }
  const auto& words = j["codewords"];
  const std::uint32_t dim = 1u << spec.n;
  spec.codewords = Eigen::MatrixXcd::Zero(dim, static_cast<int>(words.size()));
  int k = 0;
  for (const auto& w : words) {
    if (w.size() != dim) {
      throw CodeError(CodeError::BadInput, "codeword has wrong amplitude count");
    }
    for (std::uint32_t b = 0; b < dim; ++b) {
      const auto& amp = w[b];
      if (amp.size() != 2) throw CodeError(CodeError::BadInput, "amplitude must be [re, im]");
      spec.codewords(b, k) = std::complex<double>(amp[0].get<double>(), amp[1].get<double>());
    }
    ++k;
  }
  return spec;
}

std::string code_to_json(const CodeSpec& spec) {
  nlohmann::json j;
  j["n"] = spec.n;
  auto& words = j["codewords"];
  words = nlohmann::json::array();
  for (int k = 0; k < spec.M(); ++k) {
    nlohmann::json w = nlohmann::json::array();
    for (std::uint32_t b = 0; b < spec.dim(); ++b) {
      w.push_back({spec.codewords(b, k).real(), spec.codewords(b, k).imag()});
    }
    words.push_back(std::move(w));
  }
  return j.dump(2);
}

}  // namespace adlp
