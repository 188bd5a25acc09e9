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

#ifndef ADLP_LP_HPP
#define ADLP_LP_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "adlp/codes.hpp"
#include "adlp/simplex.hpp"

namespace adlp {

inline constexpr const char* kToolVersion = "adlp 0.1.0";

// Damping parameter with the verbatim text it was parsed from, so reports
// echo exactly what the caller wrote.
struct GammaValue {
  double value = 0.0;
  std::string text;

  static GammaValue parse(const std::string& text);
  static GammaValue of(double value);
};

enum class ConstraintSet { PaperLiteral, Strengthened };
const char* constraint_set_name(ConstraintSet set);

struct FeasibilityQuery {
  int n = 0;
  int M = 0;
  int t = 0;
  double c = 0.0;
  std::vector<GammaValue> gammas;
  ConstraintSet set = ConstraintSet::PaperLiteral;
};

struct LinTerm {
  int var;
  double coeff;
};

// One constraint row; the container it lives in decides whether it reads
// `= rhs` or `<= rhs`.
struct LinRow {
  std::string name;
  std::vector<LinTerm> terms;
  double rhs = 0.0;
};

// The assembled feasibility system. Variable catalog, in order:
//   [0, pair_count): auxiliary pair variables y_{sigma,tau}, sigma <= tau,
//       indexed by pair_index; y carries the tensor-square value
//       tr(sigma P) tr(tau P), so swap symmetry is structural.
//   then per gamma k: A_0..A_n followed by B_0..B_n, where the stored
//       quantity is the enumerator divided by gamma_k^i. The scaling keeps
//       every row coefficient at unit size even for tiny gamma.
struct LPProblem {
  FeasibilityQuery query;
  int n = 0;            // qubit count backing the pair indexing
  int gamma_count = 0;
  std::vector<LinRow> equalities;
  std::vector<LinRow> inequalities;
  std::vector<double> lower;  // full catalog; +-inf allowed
  std::vector<double> upper;

  std::int64_t pair_count() const;
  int var_count() const;
  std::int64_t pair_index(std::uint32_t sigma, std::uint32_t tau) const;
  void pair_decode(std::int64_t index, std::uint32_t& sigma, std::uint32_t& tau) const;
  int a_var(int k, int i) const;
  int b_var(int k, int i) const;
  // Which of y/A/B a variable is, and its name: y_<sigma>_<tau>, A_<i>_<k>,
  // B_<i>_<k>.
  std::string var_name(int var) const;
};

LPProblem assemble(const FeasibilityQuery& q);

struct LPVerdict {
  SolveStatus status = SolveStatus::NumericalFailure;
  std::vector<double> witness;  // catalog order; filled when Feasible
  double revalidation_max_violation = 0.0;
  double phase1_objective = 0.0;
  int iterations = 0;
  std::string certificate;  // infeasibility attestation summary
  std::string note;
};

LPVerdict solve(const LPProblem& p, const SolveOptions& opt = {});

// Max absolute violation of x over every row and bound; the independent
// check behind every Feasible verdict.
double evaluate_violation(const LPProblem& p, const std::vector<double>& x);

// Catalog assignment built from a concrete code: pair values from its aux
// vector, enumerator variables from its enumerators (scaled).
std::vector<double> witness_from_code(const LPProblem& p, const Code& code);

struct ScanResult {
  enum Kind { Found, NoBracket, Failure } kind = Failure;
  double c = 0.0;  // largest tested c with an Infeasible verdict, when Found
  int evaluations = 0;
  std::string note;
};

// Bisection core over any monotone probe: Infeasible below some threshold,
// Feasible above it. Returns the largest tested c that probed Infeasible.
ScanResult scan_threshold(const std::function<SolveStatus(double)>& probe, double c_lo,
                          double c_hi, double resolution);

// Bisection for the largest ruled-out c in [c_lo, c_hi]; relies on larger c
// only relaxing the system.
ScanResult max_ruled_out_c(const FeasibilityQuery& base, double c_lo, double c_hi,
                           double resolution, const SolveOptions& opt = {});

// Plain-text LP interchange (CPLEX LP dialect): objective `obj: 0`, named
// rows, a Bounds section covering the whole catalog, variable names as in
// var_name. Header comments carry the query so import can rebuild it.
void export_lp(const LPProblem& p, std::ostream& out);
LPProblem import_lp(std::istream& in);

// Verdict report with full provenance: version, query echo, tolerances,
// enumerator values recovered from the witness.
std::string verdict_to_json(const LPProblem& p, const LPVerdict& v, const SolveOptions& opt = {});

}  // namespace adlp

#endif  // ADLP_LP_HPP
