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

#include "adlp/reference.hpp"

#include <complex>
#include <stdexcept>

#include "adlp/kraus.hpp"
#include "adlp/pauli.hpp"

namespace adlp::reference {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) throw std::length_error(std::string(what) + ": qubit count too large for the dense path");
}

}  // namespace

std::pair<EnumeratorVector, EnumeratorVector> ad_enumerators(const Code& code, double gamma) {
  check_gamma(gamma);
  const int n = code.n();
  check_cap(n, 8, "reference::ad_enumerators");
  const double trP = static_cast<double>(code.M());
  EnumeratorVector A{EnumeratorKind::A, gamma, std::vector<double>(n + 1, 0.0)};
  EnumeratorVector B{EnumeratorKind::B, gamma, std::vector<double>(n + 1, 0.0)};
  const Eigen::MatrixXcd& P = code.projector;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    const int w = __builtin_popcount(x);
    const Eigen::MatrixXcd E = kraus_dense(x, n, gamma);
    const std::complex<double> trEP = (E * P).trace();
    A.values[w] += (trEP * std::conj(trEP)).real() / (trP * trP);
    B.values[w] += (E * P * E.adjoint() * P).trace().real() / trP;
  }
  return {A, B};
}

std::pair<EnumeratorVector, EnumeratorVector> sl_enumerators(const Code& code) {
  const int n = code.n();
  check_cap(n, 6, "reference::sl_enumerators");
  const double M = static_cast<double>(code.M());
  EnumeratorVector A{EnumeratorKind::A_SL, 0.0, std::vector<double>(n + 1, 0.0)};
  EnumeratorVector B{EnumeratorKind::B_SL, 0.0, std::vector<double>(n + 1, 0.0)};
  const Eigen::MatrixXcd& P = code.projector;
  for (std::uint32_t s = 0; s < pauli_count(n); ++s) {
    const PauliString p = PauliString::from_index(s, n);
    const Eigen::MatrixXcd S = dense_matrix(p);
    const int w = p.weight();
    const double trSP = (S * P).trace().real();
    A.values[w] += trSP * trSP / (M * M);
    B.values[w] += (S * P * S * P).trace().real() / M;
  }
  return {A, B};
}

AuxVector aux_vector(const Code& code) {
  const int n = code.n();
  check_cap(n, 6, "reference::aux_vector");
  AuxVector aux;
  aux.n = n;
  aux.phi.resize(pauli_count(n));
  for (std::uint32_t s = 0; s < pauli_count(n); ++s) {
    const Eigen::MatrixXcd S = dense_matrix(PauliString::from_index(s, n));
    aux.phi[s] = (S * code.projector).trace().real();
  }
  return aux;
}

ConnectionMatrix build_connection(ConnectionKind kind, int n, double gamma) {
  check_gamma(gamma);
  check_cap(n, 3, "reference::build_connection");
  const std::uint32_t N = pauli_count(n);
  ConnectionMatrix m;
  m.kind = kind;
  m.n = n;
  m.gamma = gamma;
  m.rows.assign(n + 1, {});
  std::vector<Eigen::MatrixXcd> paulis(N);
  for (std::uint32_t s = 0; s < N; ++s) {
    paulis[s] = dense_matrix(PauliString::from_index(s, n));
  }
  std::vector<Eigen::MatrixXcd> kraus(1u << n);
  std::vector<Eigen::MatrixXcd> kraus_dag(1u << n);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    kraus[x] = kraus_dense(x, n, gamma);
    kraus_dag[x] = kraus[x].adjoint();
  }
  const double inv = 1.0 / static_cast<double>(N);  // 4^-n
  for (std::uint32_t s = 0; s < N; ++s) {
    for (std::uint32_t t = s; t < N; ++t) {
      std::vector<double> acc(n + 1, 0.0);
      for (std::uint32_t x = 0; x < (1u << n); ++x) {
        const Eigen::MatrixXcd& E = kraus[x];
        std::complex<double> fwd, rev;
        if (kind == ConnectionKind::A) {
          fwd = (E * paulis[s]).trace() * (kraus_dag[x] * paulis[t]).trace();
          rev = (E * paulis[t]).trace() * (kraus_dag[x] * paulis[s]).trace();
        } else {
          fwd = (E * paulis[s] * kraus_dag[x] * paulis[t]).trace();
          rev = (E * paulis[t] * kraus_dag[x] * paulis[s]).trace();
        }
        acc[__builtin_popcount(x)] += (s == t ? fwd.real() : (fwd + rev).real()) * inv;
      }
      for (int i = 0; i <= n; ++i) {
        if (std::abs(acc[i]) > 1e-13) m.rows[i].push_back({s, t, acc[i]});
      }
    }
  }
  return m;
}

}  // namespace adlp::reference
