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

// Timing comparison of the serial dense reference kernels against the fast
// paths, and of the fast paths with parallelism off and on.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>

#include <Eigen/Dense>

#include "adlp/codes.hpp"
#include "adlp/connection.hpp"
#include "adlp/enumerator.hpp"
#include "adlp/parallel.hpp"
#include "adlp/reference.hpp"

namespace {

double now_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double timed(F&& f) {
  const double t0 = now_ms();
  f();
  return now_ms() - t0;
}

adlp::Code random_code(int n, int M, std::mt19937_64& rng) {
  const int dim = 1 << n;
  Eigen::MatrixXcd g(dim, M);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double u = ((rng() >> 11) + 0.5) * 0x1p-53;
      const double v = ((rng() >> 11) + 0.5) * 0x1p-53;
      const double r = std::sqrt(-2.0 * std::log(u));
      g(i, j) = std::complex<double>(r * std::cos(2.0 * 3.14159265358979323846 * v),
                                     r * std::sin(2.0 * 3.14159265358979323846 * v));
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  adlp::CodeSpec spec;
  spec.n = n;
  spec.codewords = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, M);
  return adlp::validate(spec);
}

double max_diff(const adlp::EnumeratorVector& a, const adlp::EnumeratorVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]));
  }
  return worst;
}

double max_diff(const adlp::ConnectionMatrix& a, const adlp::ConnectionMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    if (a.rows[i].size() != b.rows[i].size()) return 1.0;
    for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
      worst = std::max(worst, std::abs(a.rows[i][j].value - b.rows[i][j].value));
    }
  }
  return worst;
}

}  // namespace

int main() {
  const double gamma = 0.1;
  std::mt19937_64 rng(12);
  std::printf("workers available: %d\n", (adlp::set_parallel(true), adlp::worker_count()));

  {
    const adlp::Code code = random_code(8, 2, rng);
    std::pair<adlp::EnumeratorVector, adlp::EnumeratorVector> ref, slow, fast;
    const double t_ref = timed([&] { ref = adlp::reference::ad_enumerators(code, gamma); });
    adlp::set_parallel(false);
    const double t_slow = timed([&] { slow = adlp::ad_enumerators(code, gamma); });
    adlp::set_parallel(true);
    const double t_fast = timed([&] { fast = adlp::ad_enumerators(code, gamma); });
    std::printf("\nad enumerators, n=8 M=2 gamma=%g\n", gamma);
    std::printf("  %-28s %8.1f ms\n", "reference (dense, serial)", t_ref);
    std::printf("  %-28s %8.1f ms   max diff %.2e\n", "fast, threads off", t_slow,
                std::max(max_diff(ref.first, slow.first), max_diff(ref.second, slow.second)));
    std::printf("  %-28s %8.1f ms   max diff %.2e\n", "fast, threads on", t_fast,
                std::max(max_diff(ref.first, fast.first), max_diff(ref.second, fast.second)));
  }

  {
    std::pair<adlp::EnumeratorVector, adlp::EnumeratorVector> slow, fast;
    const adlp::Code shor = adlp::validate(adlp::builtin("shor9"));
    adlp::set_parallel(false);
    const double t_slow = timed([&] { slow = adlp::ad_enumerators(shor, gamma); });
    adlp::set_parallel(true);
    const double t_fast = timed([&] { fast = adlp::ad_enumerators(shor, gamma); });
    std::printf("\nad enumerators, shor9\n");
    std::printf("  %-28s %8.1f ms\n", "fast, threads off", t_slow);
    std::printf("  %-28s %8.1f ms   max diff %.2e, speedup %.2fx\n", "fast, threads on", t_fast,
                std::max(max_diff(slow.first, fast.first), max_diff(slow.second, fast.second)),
                t_slow / std::max(1e-3, t_fast));
  }

  for (const auto kind : {adlp::ConnectionKind::A, adlp::ConnectionKind::B}) {
    const char* name = kind == adlp::ConnectionKind::A ? "A" : "B";
    adlp::ConnectionMatrix ref, slow, fast;
    const double t_ref = timed([&] { ref = adlp::reference::build_connection(kind, 3, gamma); });
    adlp::set_parallel(false);
    const double t_slow = timed([&] { slow = adlp::build_connection(kind, 3, gamma); });
    adlp::set_parallel(true);
    const double t_fast = timed([&] { fast = adlp::build_connection(kind, 3, gamma); });
    std::printf("\nconnection matrix %s, n=3\n", name);
    std::printf("  %-28s %8.1f ms\n", "reference (dense, serial)", t_ref);
    std::printf("  %-28s %8.1f ms   max diff %.2e\n", "fast, threads off", t_slow,
                max_diff(ref, slow));
    std::printf("  %-28s %8.1f ms   max diff %.2e\n", "fast, threads on", t_fast,
                max_diff(ref, fast));
  }

  {
    adlp::ConnectionMatrix slow, fast;
    adlp::set_parallel(false);
    const double t_slow =
        timed([&] { slow = adlp::build_connection(adlp::ConnectionKind::A, 5, gamma); });
    adlp::set_parallel(true);
    const double t_fast =
        timed([&] { fast = adlp::build_connection(adlp::ConnectionKind::A, 5, gamma); });
    std::printf("\nconnection matrix A, n=5\n");
    std::printf("  %-28s %8.1f ms\n", "fast, threads off", t_slow);
    std::printf("  %-28s %8.1f ms   max diff %.2e, speedup %.2fx\n", "fast, threads on", t_fast,
                max_diff(slow, fast), t_slow / std::max(1e-3, t_fast));
  }
  return 0;
}
