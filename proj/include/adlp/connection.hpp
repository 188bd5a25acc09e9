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

#ifndef ADLP_CONNECTION_HPP
#define ADLP_CONNECTION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adlp/codes.hpp"
#include "adlp/enumerator.hpp"

namespace adlp {

enum class ConnectionKind { A, B };

// One sparse coefficient on the unordered pair {sigma, tau}, sigma <= tau.
struct ConnectionEntry {
  std::uint32_t sigma;
  std::uint32_t tau;
  double value;
};

// Row i holds the weight-i map from the symmetric-reduced auxiliary space.
// The raw entry m_{sigma,tau} = 4^-n sum_{wt(x)=i} prod_j k(x_j, sigma_j, tau_j)
// is complex in the A kind and not symmetric in the B kind, so the reduced
// coefficient on an off-diagonal pair is Re(m_{sigma,tau} + m_{tau,sigma});
// the imaginary parts cancel pairwise because conj(m_{sigma,tau}) =
// m_{tau,sigma} in the A kind and the B kind is real entrywise.
struct ConnectionMatrix {
  ConnectionKind kind = ConnectionKind::A;
  int n = 0;
  double gamma = 0.0;
  std::vector<std::vector<ConnectionEntry>> rows;  // n+1 rows, canonical order
};

// Builds the matrix by per-qubit kernel factorization over all ordered pairs
// with a class-compatibility skip; n <= 6. Deterministic for any thread count.
ConnectionMatrix build_connection(ConnectionKind kind, int n, double gamma);

// Row-by-row application to the tensor square of aux.
std::vector<double> apply_connection(const ConnectionMatrix& m, const AuxVector& aux);

struct LemmaReport {
  double residual_A = 0.0;  // max_i |(M_A aux)_i - (tr P)^2 A_i|
  double residual_B = 0.0;  // max_i |(M_B aux)_i - tr P B_i|
  bool pass = false;
};

// Checks both connection identities against the directly computed enumerators.
LemmaReport verify_lemma(const Code& code, double gamma, double tol);

// Debug dump: [{"i": int, "entries": [[sigma, tau, value], ...]}, ...].
std::string connection_to_json(const ConnectionMatrix& m);

}  // namespace adlp

#endif  // ADLP_CONNECTION_HPP
