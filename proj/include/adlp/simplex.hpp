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

#ifndef ADLP_SIMPLEX_HPP
#define ADLP_SIMPLEX_HPP

#include <string>

#include <Eigen/Dense>

namespace adlp {

// Feasibility system over variables with box bounds (entries of lower/upper
// may be +-infinity; lower == upper pins a variable).
struct BoundedLP {
  Eigen::MatrixXd eq_A;  // eq_A x = eq_b
  Eigen::VectorXd eq_b;
  Eigen::MatrixXd ub_A;  // ub_A x <= ub_b
  Eigen::VectorXd ub_b;
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  int var_count() const { return static_cast<int>(lower.size()); }
};

enum class SolveStatus { Feasible, Infeasible, NumericalFailure };

struct SolveOptions {
  double feas_tol = 1e-7;    // phase-1 optimum above this attests infeasibility
  double pivot_tol = 1e-9;   // entries below this never pivot
  int max_iterations = 200000;
  int stall_limit = 2000;      // non-improving steps before Bland's rule kicks in
  int refresh_interval = 128;  // pivots between refactorizations off the pristine copy
};

struct SolveReport {
  SolveStatus status = SolveStatus::NumericalFailure;
  Eigen::VectorXd witness;     // original variable order, set when Feasible
  double phase1_objective = 0.0;
  int iterations = 0;
  // Infeasibility certificate y over the original rows (eq then ub): the
  // aggregated row y'A majorizes 0 on every column while y'b stays positive.
  Eigen::VectorXd farkas_eq;
  Eigen::VectorXd farkas_ub;
  double farkas_gap = 0.0;       // y'b, positive when the certificate holds
  double farkas_column_max = 0.0;  // max over columns of the aggregated row
  bool certificate_checked = false;
  std::string note;
};

// Deterministic dense two-phase simplex: Dantzig pricing, Bland fallback on
// degenerate stalls, full-artificial phase-1 start. Only a feasible point is
// sought; there is no objective.
SolveReport find_feasible_point(const BoundedLP& lp, const SolveOptions& opt = {});

}  // namespace adlp

#endif  // ADLP_SIMPLEX_HPP
