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
#include <map>

#include <json.hpp>

#include "adlp/connection.hpp"
#include "adlp/enumerator.hpp"
#include "adlp/reference.hpp"
#include "oracle.hpp"

namespace {

using EntryMap = std::map<std::pair<std::uint32_t, std::uint32_t>, double>;

EntryMap to_map(const std::vector<adlp::ConnectionEntry>& row) {
  EntryMap m;
  for (const auto& e : row) m[{e.sigma, e.tau}] = e.value;
  return m;
}

double row_diff(const std::vector<adlp::ConnectionEntry>& a,
                const std::vector<adlp::ConnectionEntry>& b) {
  const EntryMap ma = to_map(a), mb = to_map(b);
  double worst = 0.0;
  for (const auto& [key, v] : ma) {
    const auto it = mb.find(key);
    worst = std::max(worst, std::abs(v - (it == mb.end() ? 0.0 : it->second)));
  }
  for (const auto& [key, v] : mb) {
    if (!ma.count(key)) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

}  // namespace

TEST_SUITE_BEGIN("connection");

TEST_CASE("matches the dense reference build") {
  for (int n = 1; n <= 3; ++n) {
    for (const double gamma : {0.05, 0.3, 0.8}) {
      for (const auto kind : {adlp::ConnectionKind::A, adlp::ConnectionKind::B}) {
        const adlp::ConnectionMatrix fast = adlp::build_connection(kind, n, gamma);
        const adlp::ConnectionMatrix ref = adlp::reference::build_connection(kind, n, gamma);
        REQUIRE(fast.rows.size() == static_cast<std::size_t>(n + 1));
        for (int i = 0; i <= n; ++i) {
          CHECK(row_diff(fast.rows[i], ref.rows[i]) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("entries are canonical and unordered") {
  const adlp::ConnectionMatrix m = adlp::build_connection(adlp::ConnectionKind::B, 3, 0.25);
  for (const auto& row : m.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      CHECK(row[j].sigma <= row[j].tau);
      if (j > 0) {
        const bool ordered = row[j - 1].sigma < row[j].sigma ||
                             (row[j - 1].sigma == row[j].sigma && row[j - 1].tau < row[j].tau);
        CHECK(ordered);
      }
    }
  }
}

TEST_CASE("single-qubit weight-0 diagonal") {
  const double gamma = 0.4;
  const double s = std::sqrt(1.0 - gamma);
  const adlp::ConnectionMatrix m = adlp::build_connection(adlp::ConnectionKind::A, 1, gamma);
  const EntryMap row0 = to_map(m.rows[0]);
  CHECK(row0.at({0, 0}) == doctest::Approx((1 + s) * (1 + s) / 4));
  CHECK(row0.at({3, 3}) == doctest::Approx((1 - s) * (1 - s) / 4));
  // Off-diagonal (I, Z) carries both orderings: 2 (1+s)(1-s) / 4.
  CHECK(row0.at({0, 3}) == doctest::Approx(2 * (1 + s) * (1 - s) / 4));
}

TEST_CASE("identities hold on the four-qubit code") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  for (const double gamma : {0.01, 0.3, 0.9}) {
    const adlp::LemmaReport rep = adlp::verify_lemma(code, gamma, 1e-9);
    CHECK(rep.pass);
    CHECK(rep.residual_A < 1e-9);
    CHECK(rep.residual_B < 1e-9);
  }
}

TEST_CASE("identities hold on random codes") {
  oracle::GaussianSource gauss(99);
  for (int n = 1; n <= 3; ++n) {
    for (int M = 1; M <= 2; ++M) {
      const adlp::Code code = oracle::random_code(n, M, gauss);
      for (const double gamma : {0.05, 0.5}) {
        const adlp::LemmaReport rep = adlp::verify_lemma(code, gamma, 1e-9);
        CHECK(rep.pass);
      }
    }
  }
}

TEST_CASE("apply_connection reproduces the enumerators") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  const double gamma = 0.15;
  const adlp::AuxVector aux = adlp::aux_vector(code);
  const auto [ea, eb] = adlp::ad_enumerators(code, gamma);
  const std::vector<double> lhs_a =
      adlp::apply_connection(adlp::build_connection(adlp::ConnectionKind::A, 4, gamma), aux);
  const std::vector<double> lhs_b =
      adlp::apply_connection(adlp::build_connection(adlp::ConnectionKind::B, 4, gamma), aux);
  const double M = code.M();
  for (int i = 0; i <= 4; ++i) {
    CHECK(std::abs(lhs_a[i] - M * M * ea.values[i]) < 1e-9);
    CHECK(std::abs(lhs_b[i] - M * eb.values[i]) < 1e-9);
  }
}

TEST_CASE("json dump parses") {
  const adlp::ConnectionMatrix m = adlp::build_connection(adlp::ConnectionKind::A, 2, 0.3);
  const nlohmann::json j = nlohmann::json::parse(adlp::connection_to_json(m));
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0].contains("entries"));
}

TEST_SUITE_END();
