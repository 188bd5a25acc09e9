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
#include <limits>
#include <sstream>

#include <json.hpp>

#include "adlp/lp.hpp"
#include "oracle.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

adlp::FeasibilityQuery query(int n, int M, int t, double c, std::initializer_list<const char*> gammas,
                             adlp::ConstraintSet set = adlp::ConstraintSet::PaperLiteral) {
  adlp::FeasibilityQuery q;
  q.n = n;
  q.M = M;
  q.t = t;
  q.c = c;
  for (const char* g : gammas) q.gammas.push_back(adlp::GammaValue::parse(g));
  q.set = set;
  return q;
}

}  // namespace

TEST_SUITE_BEGIN("lp");

TEST_CASE("gamma parsing") {
  const adlp::GammaValue g = adlp::GammaValue::parse("1e-4");
  CHECK(g.value == 1e-4);
  CHECK(g.text == "1e-4");
  CHECK_THROWS_AS(adlp::GammaValue::parse("0.1x"), std::invalid_argument);
  CHECK_THROWS_AS(adlp::GammaValue::parse(""), std::invalid_argument);
}

TEST_CASE("assemble counts for the one-qubit system") {
  const adlp::LPProblem p = adlp::assemble(query(1, 1, 0, 1.0, {"0.1"}));
  CHECK(p.pair_count() == 10);
  CHECK(p.var_count() == 14);
  CHECK(p.equalities.size() == 4);       // two kinds, weights 0 and 1
  CHECK(p.inequalities.size() == 2);     // one gap row, one trace row
  const std::int64_t anchor = p.pair_index(0, 0);
  CHECK(p.lower[anchor] == 1.0);
  CHECK(p.upper[anchor] == 1.0);
  CHECK(p.lower[p.a_var(0, 0)] == 0.0);
  CHECK(p.upper[p.b_var(0, 1)] == 1.0);  // C(1, 1)
  CHECK(p.var_name(anchor) == "y_0_0");
  CHECK(p.var_name(p.a_var(0, 0)) == "A_0_0");
  CHECK(p.var_name(p.b_var(0, 1)) == "B_1_0");
}

TEST_CASE("pair indexing round trip") {
  adlp::LPProblem p = adlp::assemble(query(2, 1, 0, 1.0, {"0.5"}));
  const std::uint32_t N = 16;
  std::int64_t expect = 0;
  for (std::uint32_t s = 0; s < N; ++s) {
    for (std::uint32_t t = s; t < N; ++t) {
      REQUIRE(p.pair_index(s, t) == expect);
      std::uint32_t ds = 0, dt = 0;
      p.pair_decode(expect, ds, dt);
      REQUIRE(ds == s);
      REQUIRE(dt == t);
      ++expect;
    }
  }
  CHECK(expect == p.pair_count());
}

TEST_CASE("strengthened set adds the documented rows") {
  const adlp::LPProblem lit = adlp::assemble(query(2, 2, 1, 0.5, {"0.1", "0.2"}));
  const adlp::LPProblem str =
      adlp::assemble(query(2, 2, 1, 0.5, {"0.1", "0.2"}, adlp::ConstraintSet::Strengthened));
  CHECK(str.equalities.size() == lit.equalities.size() + 1);  // purity
  // Per gamma: n+1 dominance rows on top of the literal gap and trace rows.
  CHECK(str.inequalities.size() == lit.inequalities.size() + 2 * 3);
  CHECK(str.lower[str.a_var(0, 0)] == doctest::Approx(std::pow(0.9, 2)));
  for (std::uint32_t s = 0; s < 16; ++s) {
    CHECK(str.lower[str.pair_index(s, s)] >= 0.0);
    CHECK(str.upper[str.pair_index(s, s)] <= 4.0);
  }
}

TEST_CASE("row coefficients stay conditioned") {
  for (const auto set : {adlp::ConstraintSet::PaperLiteral, adlp::ConstraintSet::Strengthened}) {
    const adlp::LPProblem p = adlp::assemble(query(3, 2, 1, 9.8e4, {"0.1", "0.0001"}, set));
    const double cap = std::max(p.query.c, oracle::binom(3, 1));
    for (const auto& row : p.inequalities) {
      for (const auto& term : row.terms) {
        CHECK(term.coeff >= -1.0 - 1e-12);
        CHECK(term.coeff <= cap + 1e-12);
      }
      CHECK(row.rhs <= cap + 1e-12);
    }
    // Equality rows: pair coefficients are gamma-normalized kernel products.
    for (const auto& row : p.equalities) {
      for (const auto& term : row.terms) {
        if (term.var < p.pair_count()) CHECK(std::abs(term.coeff) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("assemble rejects bad queries") {
  CHECK_THROWS_AS(adlp::assemble(query(0, 1, 0, 1.0, {"0.1"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 5, 0, 1.0, {"0.1"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 1, 3, 1.0, {"0.1"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 1, 0, -1.0, {"0.1"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 1, 0, 1.0, {"0.0"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 1, 0, 1.0, {"1.0"})), std::invalid_argument);
  CHECK_THROWS_AS(adlp::assemble(query(2, 1, 0, 1.0, {})), std::invalid_argument);
}

TEST_CASE("a real code satisfies its own system") {
  const adlp::Code code = adlp::validate(adlp::builtin("leung4"));
  for (const auto set : {adlp::ConstraintSet::PaperLiteral, adlp::ConstraintSet::Strengthened}) {
    const adlp::LPProblem p =
        adlp::assemble(query(4, 2, 1, 3.0 / 64, {"0.1", "0.05", "0.01", "0.0001"}, set));
    const std::vector<double> x = adlp::witness_from_code(p, code);
    CHECK(adlp::evaluate_violation(p, x) < 1e-9);
  }
}

TEST_CASE("trivial code satisfies the zero-slack system") {
  const adlp::Code code = adlp::validate(adlp::builtin("trivial-zero(1)"));
  const adlp::LPProblem p = adlp::assemble(query(1, 1, 0, 0.0, {"0.3"}));
  const std::vector<double> x = adlp::witness_from_code(p, code);
  CHECK(adlp::evaluate_violation(p, x) < 1e-11);
}

TEST_CASE("solve finds the one-qubit system feasible") {
  for (const auto set : {adlp::ConstraintSet::PaperLiteral, adlp::ConstraintSet::Strengthened}) {
    const adlp::LPProblem p = adlp::assemble(query(1, 1, 0, 1.0, {"0.1", "0.5"}, set));
    const adlp::LPVerdict v = adlp::solve(p);
    REQUIRE(v.status == adlp::SolveStatus::Feasible);
    CHECK(v.revalidation_max_violation <= 1e-7);
    CHECK(v.witness[p.pair_index(0, 0)] == doctest::Approx(1.0));
  }
}

TEST_CASE("solve is deterministic") {
  const adlp::LPProblem p = adlp::assemble(query(2, 2, 1, 0.5, {"0.1"}));
  const adlp::LPVerdict v1 = adlp::solve(p);
  const adlp::LPVerdict v2 = adlp::solve(p);
  REQUIRE(v1.status == v2.status);
  CHECK(v1.iterations == v2.iterations);
  CHECK(v1.witness == v2.witness);
}

TEST_CASE("export and import round trip") {
  for (const auto set : {adlp::ConstraintSet::PaperLiteral, adlp::ConstraintSet::Strengthened}) {
    const adlp::LPProblem p = adlp::assemble(query(2, 2, 1, 0.25, {"0.1", "0.0001"}, set));
    std::ostringstream os;
    adlp::export_lp(p, os);
    std::istringstream is(os.str());
    const adlp::LPProblem back = adlp::import_lp(is);

    CHECK(back.query.n == p.query.n);
    CHECK(back.query.M == p.query.M);
    CHECK(back.query.t == p.query.t);
    CHECK(back.query.c == p.query.c);
    CHECK(back.query.set == p.query.set);
    REQUIRE(back.query.gammas.size() == p.query.gammas.size());
    CHECK(back.query.gammas[1].text == p.query.gammas[1].text);
    REQUIRE(back.equalities.size() == p.equalities.size());
    REQUIRE(back.inequalities.size() == p.inequalities.size());
    for (std::size_t i = 0; i < p.equalities.size(); ++i) {
      REQUIRE(back.equalities[i].terms.size() == p.equalities[i].terms.size());
      CHECK(back.equalities[i].rhs == p.equalities[i].rhs);
      for (std::size_t j = 0; j < p.equalities[i].terms.size(); ++j) {
        CHECK(back.equalities[i].terms[j].var == p.equalities[i].terms[j].var);
        CHECK(back.equalities[i].terms[j].coeff == p.equalities[i].terms[j].coeff);
      }
    }
    for (int v = 0; v < p.var_count(); ++v) {
      CHECK(back.lower[v] == p.lower[v]);
      CHECK(back.upper[v] == p.upper[v]);
    }

    const adlp::LPVerdict direct = adlp::solve(p);
    const adlp::LPVerdict imported = adlp::solve(back);
    CHECK(direct.status == imported.status);
  }
}

TEST_CASE("import rejects garbage") {
  std::istringstream empty("");
  CHECK_THROWS_AS(adlp::import_lp(empty), std::runtime_error);
  std::istringstream junk("Minimize\n obj: 0 x\nSubject To\n r1: x = 1\nEnd\n");
  CHECK_THROWS_AS(adlp::import_lp(junk), std::runtime_error);
}

TEST_CASE("threshold scan") {
  // Synthetic monotone probe with threshold 42.3.
  auto probe = [](double c) {
    return c < 42.3 ? adlp::SolveStatus::Infeasible : adlp::SolveStatus::Feasible;
  };
  const adlp::ScanResult found = adlp::scan_threshold(probe, 0.0, 100.0, 0.01);
  REQUIRE(found.kind == adlp::ScanResult::Found);
  CHECK(found.c <= 42.3);
  CHECK(found.c >= 42.3 - 0.01);

  const adlp::ScanResult whole = adlp::scan_threshold(probe, 0.0, 10.0, 0.01);
  REQUIRE(whole.kind == adlp::ScanResult::Found);
  CHECK(whole.c == 10.0);  // infeasible at both endpoints

  auto feasible = [](double) { return adlp::SolveStatus::Feasible; };
  CHECK(adlp::scan_threshold(feasible, 0.0, 10.0, 0.01).kind == adlp::ScanResult::NoBracket);

  auto broken = [](double) { return adlp::SolveStatus::NumericalFailure; };
  CHECK(adlp::scan_threshold(broken, 0.0, 10.0, 0.01).kind == adlp::ScanResult::Failure);
  CHECK(adlp::scan_threshold(probe, 5.0, 1.0, 0.01).kind == adlp::ScanResult::Failure);
}

TEST_CASE("scan over a real instance reports no bracket") {
  const adlp::ScanResult r = adlp::max_ruled_out_c(query(1, 1, 0, 0.0, {"0.1"}), 0.0, 10.0, 0.5);
  CHECK(r.kind == adlp::ScanResult::NoBracket);
  CHECK(r.evaluations == 1);
}

TEST_CASE("verdict report carries provenance") {
  const adlp::LPProblem p = adlp::assemble(query(1, 1, 0, 1.0, {"0.10", "1e-3"}));
  const adlp::LPVerdict v = adlp::solve(p);
  const nlohmann::json j = nlohmann::json::parse(adlp::verdict_to_json(p, v));
  CHECK(j["tool"] == adlp::kToolVersion);
  CHECK(j["query"]["gammas"][0] == "0.10");  // verbatim echo
  CHECK(j["query"]["gammas"][1] == "1e-3");
  CHECK(j["query"]["constraintSet"] == "paper-literal");
  CHECK(j["tolerances"]["feasibility"] == 1e-7);
  CHECK(j["status"] == "Feasible");
  CHECK(j.contains("witness"));
  CHECK(j["enumerators"].size() == 2);
}

TEST_SUITE_END();
