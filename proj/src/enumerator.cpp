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

#include "adlp/enumerator.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "adlp/kraus.hpp"
#include "adlp/pauli.hpp"
#include "adlp/parallel.hpp"

namespace adlp {

namespace {

using cd = std::complex<double>;

// A_x acts on basis states as A_x |b> = [x subset of b] gamma^(w/2)
// s^(wt(b minus x)) |b minus x|>, which keeps every trace below a sum over
// supersets of x. Powers of s are looked up, not recomputed.
struct Powers {
  std::array<double, kMaxQubits + 1> s;
  std::array<double, kMaxQubits + 1> g;
  explicit Powers(int n, double gamma) {
    const double sv = std::sqrt(1.0 - gamma);
    s[0] = 1.0;
    g[0] = 1.0;
    for (int i = 1; i <= n; ++i) {
      s[i] = s[i - 1] * sv;
      g[i] = g[i - 1] * gamma;
    }
  }
};

// tr(A_x P) = gamma^(w/2) sum_{m subset of ~x} s^|m| P(m, m|x).
cd trace_kraus_times(const Eigen::MatrixXcd& P, std::uint32_t x, int n, const Powers& pw) {
  const std::uint32_t free_mask = ((1u << n) - 1u) & ~x;
  cd sum = 0.0;
  std::uint32_t m = free_mask;
  while (true) {
    sum += pw.s[__builtin_popcount(m)] * P(m, m | x);
    if (m == 0) break;
    m = (m - 1) & free_mask;
  }
  return std::sqrt(pw.g[__builtin_popcount(x)]) * sum;
}

// tr(A_x P A_x^dag P) = gamma^w sum_{a,b subset of ~x} s^(|a|+|b|)
// P(a|x, b|x) P(b, a); real and nonnegative for a projector P.
double sandwich_trace(const Eigen::MatrixXcd& P, std::uint32_t x, int n, const Powers& pw) {
  const std::uint32_t free_mask = ((1u << n) - 1u) & ~x;
  cd sum = 0.0;
  std::uint32_t a = free_mask;
  while (true) {
    const double sa = pw.s[__builtin_popcount(a)];
    std::uint32_t b = free_mask;
    while (true) {
      sum += sa * pw.s[__builtin_popcount(b)] * P(a | x, b | x) * P(b, a);
      if (b == 0) break;
      b = (b - 1) & free_mask;
    }
    if (a == 0) break;
    a = (a - 1) & free_mask;
  }
  return pw.g[__builtin_popcount(x)] * sum.real();
}

// Pauli monomial data for index sigma: sigma |b> = phase(b) |b xor xmask>
// with phase(b) = i^{y_count} * (-1)^popcount(b & zymask). Qubit j owns
// basis bit n-1-j.
struct PauliMono {
  std::uint32_t xmask = 0;
  std::uint32_t zymask = 0;
  int y_count = 0;
};

PauliMono pauli_mono(std::uint32_t sigma, int n) {
  PauliMono mono;
  for (int j = n - 1; j >= 0; --j) {
    const std::uint32_t letter = sigma & 3u;
    sigma >>= 2;
    const std::uint32_t bit = 1u << (n - 1 - j);
    if (letter == kX || letter == kY) mono.xmask |= bit;
    if (letter == kY || letter == kZ) mono.zymask |= bit;
    mono.y_count += (letter == kY);
  }
  return mono;
}

cd phase_unit(int y_count) {
  static const cd units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return units[y_count & 3];
}

}  // namespace

std::pair<EnumeratorVector, EnumeratorVector> ad_enumerators(const Code& code, double gamma) {
  check_gamma(gamma);
  const int n = code.n();
  const double trP = static_cast<double>(code.M());
  const Powers pw(n, gamma);
  const Eigen::MatrixXcd& P = code.projector;
  const std::uint32_t labels = 1u << n;
  std::vector<double> contrib_a(labels), contrib_b(labels);
#ifdef ADLP_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel_enabled())
#endif
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(labels); ++x) {
    const cd tr = trace_kraus_times(P, static_cast<std::uint32_t>(x), n, pw);
    contrib_a[static_cast<std::size_t>(x)] = std::norm(tr) / (trP * trP);
    contrib_b[static_cast<std::size_t>(x)] =
        sandwich_trace(P, static_cast<std::uint32_t>(x), n, pw) / trP;
  }
  EnumeratorVector A{EnumeratorKind::A, gamma, std::vector<double>(n + 1, 0.0)};
  EnumeratorVector B{EnumeratorKind::B, gamma, std::vector<double>(n + 1, 0.0)};
  for (std::uint32_t x = 0; x < labels; ++x) {
    const int w = __builtin_popcount(x);
    A.values[w] += contrib_a[x];
    B.values[w] += contrib_b[x];
  }
  return {A, B};
}

std::pair<EnumeratorVector, EnumeratorVector> sl_enumerators(const Code& code) {
  const int n = code.n();
  if (n > 8) throw std::length_error("sl_enumerators limited to 8 qubits");
  const int M = code.M();
  const std::uint32_t N = pauli_count(n);
  const std::uint32_t dim = code.spec.dim();
  const Eigen::MatrixXcd& psi = code.spec.codewords;
  std::vector<double> contrib_a(N), contrib_b(N);
#ifdef ADLP_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel_enabled())
#endif
  for (std::int64_t sig = 0; sig < static_cast<std::int64_t>(N); ++sig) {
    const PauliMono mono = pauli_mono(static_cast<std::uint32_t>(sig), n);
    const cd unit = phase_unit(mono.y_count);
    cd diag_sum = 0.0;
    double sq_sum = 0.0;
    for (int k = 0; k < M; ++k) {
      for (int l = 0; l < M; ++l) {
        cd elem = 0.0;  // <psi_k| sigma |psi_l>
        for (std::uint32_t b = 0; b < dim; ++b) {
          const double sign = (__builtin_popcount(b & mono.zymask) & 1) ? -1.0 : 1.0;
          elem += std::conj(psi(b ^ mono.xmask, k)) * sign * psi(b, l);
        }
        elem *= unit;
        sq_sum += std::norm(elem);
        if (k == l) diag_sum += elem;
      }
    }
    contrib_a[static_cast<std::size_t>(sig)] = std::norm(diag_sum) / (static_cast<double>(M) * M);
    contrib_b[static_cast<std::size_t>(sig)] = sq_sum / M;
  }
  EnumeratorVector A{EnumeratorKind::A_SL, 0.0, std::vector<double>(n + 1, 0.0)};
  EnumeratorVector B{EnumeratorKind::B_SL, 0.0, std::vector<double>(n + 1, 0.0)};
  for (std::uint32_t sig = 0; sig < N; ++sig) {
    const int w = pauli_index_weight(sig, n);
    A.values[w] += contrib_a[sig];
    B.values[w] += contrib_b[sig];
  }
  return {A, B};
}

AuxVector aux_vector(const Code& code) {
  const int n = code.n();
  if (n > 8) throw std::length_error("aux_vector limited to 8 qubits");
  const std::uint32_t N = pauli_count(n);
  const std::uint32_t dim = code.spec.dim();
  const Eigen::MatrixXcd& P = code.projector;
  AuxVector aux;
  aux.n = n;
  aux.phi.resize(N);
#ifdef ADLP_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (parallel_enabled())
#endif
  for (std::int64_t sig = 0; sig < static_cast<std::int64_t>(N); ++sig) {
    const PauliMono mono = pauli_mono(static_cast<std::uint32_t>(sig), n);
    cd tr = 0.0;  // tr(sigma P) = sum_k phase(k) P(k, k xor xmask)
    for (std::uint32_t k = 0; k < dim; ++k) {
      const double sign = (__builtin_popcount(k & mono.zymask) & 1) ? -1.0 : 1.0;
      tr += sign * P(k, k ^ mono.xmask);
    }
    tr *= phase_unit(mono.y_count);
    aux.phi[static_cast<std::size_t>(sig)] = tr.real();
  }
  return aux;
}

bool is_tc_ad_code(const Code& code, int t, double c, double gamma) {
  if (t < 0 || t > code.n()) throw std::invalid_argument("t out of range");
  const auto [A, B] = ad_enumerators(code, gamma);
  double bound = c;
  for (int j = 0; j <= t; ++j) bound *= gamma;
  for (int i = 0; i <= t; ++i) {
    if (B.values[i] - A.values[i] > bound + 1e-12) return false;
  }
  return true;
}

}  // namespace adlp
