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

#include <doctest.h>

#include <cmath>

#include "adlp/enumerator.hpp"
#include "adlp/pauli.hpp"
#include "adlp/reference.hpp"
#include "oracle.hpp"

TEST_SUITE_BEGIN("enumerator");

TEST_CASE("four-qubit code matches its closed forms") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  for (const double gamma : {0.01, 0.05, 0.1, 0.25, 0.5, 0.9}) {
    const auto [ea, eb] = adlp::ad_enumerators(code, gamma);
    const auto want_a = oracle::leung4_A(gamma);
    const auto want_b = oracle::leung4_B(gamma);
    for (int i = 0; i <= 4; ++i) {
      CHECK(std::abs(ea.values[i] - want_a[i]) < 1e-12);
      CHECK(std::abs(eb.values[i] - want_b[i]) < 1e-12);
    }
  }
}

TEST_CASE("fast path agrees with the dense reference") {
  oracle::GaussianSource gauss(11);
  for (int n = 1; n <= 4; ++n) {
    for (int M = 1; M <= 2; ++M) {
      const adlp::Code code = oracle::random_code(n, M, gauss);
      for (const double gamma : {0.05, 0.4, 0.95}) {
        const auto [fa, fb] = adlp::ad_enumerators(code, gamma);
        const auto [ra, rb] = adlp::reference::ad_enumerators(code, gamma);
        for (int i = 0; i <= n; ++i) {
          CHECK(std::abs(fa.values[i] - ra.values[i]) < 1e-12);
          CHECK(std::abs(fb.values[i] - rb.values[i]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("trace bounds on random codes") {
  oracle::GaussianSource gauss(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const int M = 1 + (trial / 3) % 2;
    const adlp::Code code = oracle::random_code(n, std::min(M, 1 << n), gauss);
    for (const double gamma : {0.01, 0.1, 0.5}) {
      const auto [ea, eb] = adlp::ad_enumerators(code, gamma);
      double total_b = 0.0;
      double gpow = 1.0;
      for (int i = 0; i <= n; ++i) {
        CHECK(eb.values[i] >= ea.values[i] - 1e-10);
        CHECK(ea.values[i] >= -1e-12);
        CHECK(eb.values[i] <= oracle::binom(n, i) * gpow + 1e-10);
        total_b += eb.values[i];
        gpow *= gamma;
      }
      CHECK(total_b <= 1.0 + 1e-10);
      CHECK(ea.values[0] >= std::pow(1.0 - gamma, n) - 1e-10);
    }
  }
}

TEST_CASE("pauli-weight enumerators") {
  oracle::GaussianSource gauss(31);
  for (int n = 1; n <= 3; ++n) {
    const int M = n == 1 ? 1 : 2;
    const adlp::Code code = oracle::random_code(n, M, gauss);
    const auto [fa, fb] = adlp::sl_enumerators(code);
    const auto [ra, rb] = adlp::reference::sl_enumerators(code);
    double sum_a = 0.0, sum_b = 0.0;
    for (int i = 0; i <= n; ++i) {
      CHECK(std::abs(fa.values[i] - ra.values[i]) < 1e-12);
      CHECK(std::abs(fb.values[i] - rb.values[i]) < 1e-12);
      sum_a += fa.values[i];
      sum_b += fb.values[i];
    }
    CHECK(fa.values[0] == doctest::Approx(1.0));
    CHECK(fb.values[0] == doctest::Approx(1.0));
    // Twirl identities: sum_sigma tr(sigma P)^2 = 2^n tr(P^2) and
    // sum_sigma tr(sigma P sigma P) = 2^n (tr P)^2.
    CHECK(sum_a == doctest::Approx(std::pow(2.0, n) / M));
    CHECK(sum_b == doctest::Approx(std::pow(2.0, n) * M));
  }
}

TEST_CASE("aux vector") {
  oracle::GaussianSource gauss(41);
  for (int n = 1; n <= 3; ++n) {
    const adlp::Code code = oracle::random_code(n, 2, gauss);
    const adlp::AuxVector aux = adlp::aux_vector(code);
    const adlp::AuxVector ref = adlp::reference::aux_vector(code);
    REQUIRE(aux.phi.size() == adlp::pauli_count(n));
    double sq = 0.0;
    for (std::uint32_t s = 0; s < adlp::pauli_count(n); ++s) {
      CHECK(std::abs(aux.phi[s] - ref.phi[s]) < 1e-12);
      sq += aux.phi[s] * aux.phi[s];
    }
    CHECK(aux.phi[0] == doctest::Approx(2.0));  // tr P = M
    CHECK(sq == doctest::Approx(std::pow(2.0, n) * 2.0));
    CHECK(aux.pair_value(1, 2) == aux.pair_value(2, 1));
  }
}

TEST_CASE("tc-AD definition check") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  // B_0 - A_0 = gamma^4/16 and B_1 - A_1 = 0, so t = 1 needs c >= gamma^2/16.
  CHECK(adlp::is_tc_ad_code(code, 1, 1.0 / 16, 0.1));
  CHECK(adlp::is_tc_ad_code(code, 1, 1.0 / 16, 0.95));
  // c = 3/64 works exactly up to gamma = sqrt(3)/2.
  CHECK(adlp::is_tc_ad_code(code, 1, 3.0 / 64, 0.5));
  CHECK_FALSE(adlp::is_tc_ad_code(code, 1, 3.0 / 64, 0.95));
  CHECK_FALSE(adlp::is_tc_ad_code(code, 1, 1e-9, 0.5));
  // t = 2 pulls in B_2 - A_2 ~ gamma^2 / 2, far above c gamma^3 for small c.
  CHECK_FALSE(adlp::is_tc_ad_code(code, 2, 1e-3, 0.1));
}

TEST_CASE("deterministic output") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  const auto [a1, b1] = adlp::ad_enumerators(code, 0.37);
  const auto [a2, b2] = adlp::ad_enumerators(code, 0.37);
  CHECK(a1.values == a2.values);
  CHECK(b1.values == b2.values);
}

TEST_SUITE_END();
