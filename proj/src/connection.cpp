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

#include "adlp/connection.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

#include "adlp/kraus.hpp"
#include "adlp/pauli.hpp"
#include "adlp/parallel.hpp"

namespace adlp {

namespace {

using cd = std::complex<double>;

// Per-qubit kernel pair (a=0 and a=1 factors) for one ordered letter pair.
struct QubitKernels {
  cd k0, k1;
  bool dead() const { return k0 == 0.0 && k1 == 0.0; }
};

QubitKernels qubit_kernels(ConnectionKind kind, int s_letter, int t_letter, double gamma) {
  if (kind == ConnectionKind::A) {
    return {kernel_A(0, s_letter, gamma) * kernel_A_dagger(0, t_letter, gamma),
            kernel_A(1, s_letter, gamma) * kernel_A_dagger(1, t_letter, gamma)};
  }
  return {cd(kernel_B(0, s_letter, t_letter, gamma), 0.0),
          cd(kernel_B(1, s_letter, t_letter, gamma), 0.0)};
}

// Letters must share a class on every qubit for any Kraus label to
// contribute: {I,Z} with {I,Z}, or {X,Y} with {X,Y} (the B kind additionally
// kills mixed X/Y, which the polynomial handles by exact zeros).
bool compatible(int s_letter, int t_letter) {
  const bool s_diag = (s_letter == kI || s_letter == kZ);
  const bool t_diag = (t_letter == kI || t_letter == kZ);
  return s_diag == t_diag;
}

// Degree-n polynomial in the Kraus-weight marker: coefficient i collects
// sum over labels x of weight i of the per-qubit kernel products.
void weight_poly(const std::array<QubitKernels, kMaxQubits>& per_qubit, int n, std::array<cd, kMaxQubits + 1>& coeff) {
  coeff.fill(0.0);
  coeff[0] = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i >= 1; --i) {
      coeff[i] = coeff[i] * per_qubit[j].k0 + coeff[i - 1] * per_qubit[j].k1;
    }
    coeff[0] *= per_qubit[j].k0;
  }
}

}  // namespace

ConnectionMatrix build_connection(ConnectionKind kind, int n, double gamma) {
  check_gamma(gamma);
  if (n < 1 || n > 6) throw std::length_error("build_connection limited to 6 qubits");
  const std::uint32_t N = pauli_count(n);
  const double inv = 1.0 / static_cast<double>(N);
  ConnectionMatrix m;
  m.kind = kind;
  m.n = n;
  m.gamma = gamma;
  m.rows.assign(n + 1, {});
  // Slot per sigma, reduced serially afterwards: deterministic layout for any
  // thread count.
  std::vector<std::vector<std::vector<ConnectionEntry>>> slots(N);
#ifdef ADLP_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel_enabled())
#endif
  for (std::int64_t s_signed = 0; s_signed < static_cast<std::int64_t>(N); ++s_signed) {
    const std::uint32_t s = static_cast<std::uint32_t>(s_signed);
    auto& local = slots[s];
    local.assign(n + 1, {});
    std::array<int, kMaxQubits> s_letters{};
    for (int j = 0; j < n; ++j) s_letters[j] = (s >> (2 * (n - 1 - j))) & 3u;
    std::array<QubitKernels, kMaxQubits> fwd{}, rev{};
    std::array<cd, kMaxQubits + 1> poly_f{}, poly_r{};
    for (std::uint32_t t = s; t < N; ++t) {
      bool ok = true;
      for (int j = 0; j < n && ok; ++j) {
        ok = compatible(s_letters[j], (t >> (2 * (n - 1 - j))) & 3u);
      }
      if (!ok) continue;
      for (int j = 0; j < n; ++j) {
        const int tl = (t >> (2 * (n - 1 - j))) & 3u;
        fwd[j] = qubit_kernels(kind, s_letters[j], tl, gamma);
        rev[j] = qubit_kernels(kind, tl, s_letters[j], gamma);
      }
      bool live_f = true, live_r = true;
      for (int j = 0; j < n; ++j) {
        live_f = live_f && !fwd[j].dead();
        live_r = live_r && !rev[j].dead();
      }
      if (!live_f && !live_r) continue;
      weight_poly(fwd, n, poly_f);
      if (s != t) weight_poly(rev, n, poly_r);
      for (int i = 0; i <= n; ++i) {
        const double v = (s == t ? poly_f[i].real() : (poly_f[i] + poly_r[i]).real()) * inv;
        if (v != 0.0) local[i].push_back({s, t, v});
      }
    }
  }
  for (std::uint32_t s = 0; s < N; ++s) {
    for (int i = 0; i <= n; ++i) {
      auto& row = m.rows[i];
      row.insert(row.end(), slots[s][i].begin(), slots[s][i].end());
    }
  }
  return m;
}

std::vector<double> apply_connection(const ConnectionMatrix& m, const AuxVector& aux) {
  if (aux.n != m.n) throw std::invalid_argument("aux dimension mismatch");
  std::vector<double> out(m.rows.size(), 0.0);
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    double sum = 0.0;
    for (const ConnectionEntry& e : m.rows[i]) {
      sum += e.value * aux.pair_value(e.sigma, e.tau);
    }
    out[i] = sum;
  }
  return out;
}

LemmaReport verify_lemma(const Code& code, double gamma, double tol) {
  const auto [A, B] = ad_enumerators(code, gamma);
  const AuxVector aux = aux_vector(code);
  const double trP = static_cast<double>(code.M());
  const ConnectionMatrix MA = build_connection(ConnectionKind::A, code.n(), gamma);
  const ConnectionMatrix MB = build_connection(ConnectionKind::B, code.n(), gamma);
  const std::vector<double> lhs_a = apply_connection(MA, aux);
  const std::vector<double> lhs_b = apply_connection(MB, aux);
  LemmaReport rep;
  for (int i = 0; i <= code.n(); ++i) {
    rep.residual_A = std::max(rep.residual_A, std::abs(lhs_a[i] - trP * trP * A.values[i]));
    rep.residual_B = std::max(rep.residual_B, std::abs(lhs_b[i] - trP * B.values[i]));
  }
  rep.pass = rep.residual_A < tol && rep.residual_B < tol;
  return rep;
}

std::string connection_to_json(const ConnectionMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    if (i) os << ",";
    os << "{\"i\":" << i << ",\"entries\":[";
    for (std::size_t e = 0; e < m.rows[i].size(); ++e) {
      if (e) os << ",";
      const auto& entry = m.rows[i][e];
      os << "[" << entry.sigma << "," << entry.tau << "," << entry.value << "]";
    }
    os << "]}";
  }
  os << "]";
  return os.str();
}

}  // namespace adlp
