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

#include "adlp/simplex.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace adlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Column bookkeeping for the standard-form translation. Each original
// variable becomes one shifted column, one negated column, or a pair for a
// free variable; fixed variables are substituted into the right-hand sides.
struct VarMap {
  enum Kind { Fixed, Shifted, Negated, Free } kind = Fixed;
  int col = -1;       // first standard-form column
  double offset = 0;  // x = offset + z (Shifted/Free) or offset - z (Negated)
};

}  // namespace

SolveReport find_feasible_point(const BoundedLP& lp, const SolveOptions& opt) {
  SolveReport rep;
  const int nv = lp.var_count();
  const int n_eq = static_cast<int>(lp.eq_b.size());
  const int n_ub = static_cast<int>(lp.ub_b.size());

  std::vector<VarMap> vmap(nv);
  int cols = 0;
  int bound_rows = 0;
  for (int j = 0; j < nv; ++j) {
    const double lo = lp.lower(j);
    const double hi = lp.upper(j);
    if (lo > hi) {
      rep.status = SolveStatus::Infeasible;
      rep.note = "empty bound interval on variable " + std::to_string(j);
      rep.certificate_checked = false;
      return rep;
    }
    if (lo == hi) {
      vmap[j] = {VarMap::Fixed, -1, lo};
    } else if (std::isfinite(lo)) {
      vmap[j] = {VarMap::Shifted, cols, lo};
      cols += 1;
      if (std::isfinite(hi)) bound_rows += 1;  // z <= hi - lo
    } else if (std::isfinite(hi)) {
      vmap[j] = {VarMap::Negated, cols, hi};
      cols += 1;
    } else {
      vmap[j] = {VarMap::Free, cols, 0.0};
      cols += 2;
    }
  }

  const int m = n_eq + n_ub + bound_rows;
  const int slacks = n_ub + bound_rows;
  const int total = cols + slacks + m;  // structural, slack, artificial
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, total);
  Eigen::VectorXd d = Eigen::VectorXd::Zero(m);

  auto emit_coeff = [&](int row, int j, double a) {
    const VarMap& v = vmap[j];
    switch (v.kind) {
      case VarMap::Fixed:
        d(row) -= a * v.offset;
        break;
      case VarMap::Shifted:
        T(row, v.col) += a;
        d(row) -= a * v.offset;
        break;
      case VarMap::Negated:
        T(row, v.col) -= a;
        d(row) -= a * v.offset;
        break;
      case VarMap::Free:
        T(row, v.col) += a;
        T(row, v.col + 1) -= a;
        break;
    }
  };

  for (int r = 0; r < n_eq; ++r) {
    d(r) = lp.eq_b(r);
    for (int j = 0; j < nv; ++j) {
      const double a = lp.eq_A(r, j);
      if (a != 0.0) emit_coeff(r, j, a);
    }
  }
  for (int r = 0; r < n_ub; ++r) {
    const int row = n_eq + r;
    d(row) = lp.ub_b(r);
    for (int j = 0; j < nv; ++j) {
      const double a = lp.ub_A(r, j);
      if (a != 0.0) emit_coeff(row, j, a);
    }
    T(row, cols + r) = 1.0;  // slack
  }
  {
    int row = n_eq + n_ub;
    int slack = cols + n_ub;
    for (int j = 0; j < nv; ++j) {
      if (vmap[j].kind == VarMap::Shifted && std::isfinite(lp.upper(j))) {
        T(row, vmap[j].col) = 1.0;
        T(row, slack) = 1.0;
        d(row) = lp.upper(j) - lp.lower(j);
        ++row;
        ++slack;
      }
    }
  }

  std::vector<int> flipped(m, 0);
  for (int r = 0; r < m; ++r) {
    if (d(r) < 0.0) {
      T.row(r) *= -1.0;
      d(r) *= -1.0;
      flipped[r] = 1;
    }
  }
  for (int r = 0; r < m; ++r) T(r, cols + slacks + r) = 1.0;
  // Pristine copy of the flipped system. Pivoting overwrites the tableau, so
  // certificate verification and every refactorization go through this copy.
  const Eigen::MatrixXd P0 = T;
  const Eigen::VectorXd d0 = d;
  const Eigen::MatrixXd S0 = P0.leftCols(cols + slacks);

  // Phase-1 state: basis, reduced-cost row for min sum(artificials).
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = cols + slacks + r;
  Eigen::VectorXd redcost = Eigen::VectorXd::Zero(total);
  // c_j = 0 for structural/slack, 1 for artificial; reduced costs start at
  // c_j - sum_r T(r, j).
  for (int j = 0; j < cols + slacks; ++j) redcost(j) = -T.col(j).sum();

  // Accumulated row operations drift, and a pivot on a noise-sized entry can
  // detach the tableau from the system it claims to represent. Rebuilding
  // T, d, and the reduced costs from the pristine copy puts every later
  // decision back on solid numbers; at this problem size a dense solve per
  // refresh is cheap.
  auto refresh = [&]() -> bool {
    Eigen::MatrixXd B(m, m);
    for (int r = 0; r < m; ++r) B.col(r) = P0.col(basis[r]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) return false;
    T = lu.solve(P0);
    d = lu.solve(d0);
    redcost = Eigen::VectorXd::Zero(total);
    for (int r = 0; r < m; ++r) {
      if (basis[r] >= cols + slacks) redcost -= T.row(r).transpose();
    }
    for (int j = cols + slacks; j < total; ++j) redcost(j) += 1.0;
    return true;
  };

  bool bland = false;
  bool fresh = true;
  int since_refresh = 0;
  int stall = 0;
  int iter = 0;
  for (; iter < opt.max_iterations; ++iter) {
    if (since_refresh >= opt.refresh_interval && !fresh) {
      if (!refresh()) {
        rep.status = SolveStatus::NumericalFailure;
        rep.iterations = iter;
        rep.note = "singular basis at refactorization";
        return rep;
      }
      fresh = true;
      since_refresh = 0;
    }

    // Artificials never re-enter; dropping them from pricing keeps phase-1
    // convergence intact and the scan short.
    int enter = -1;
    if (!bland) {
      double best = -opt.pivot_tol;
      for (int j = 0; j < cols + slacks; ++j) {
        if (redcost(j) < best) {
          best = redcost(j);
          enter = j;
        }
      }
    } else {
      for (int j = 0; j < cols + slacks; ++j) {
        if (redcost(j) < -opt.pivot_tol) {
          enter = j;
          break;
        }
      }
    }
    if (enter < 0) {
      // Optimality is only declared on refreshed numbers; drifted reduced
      // costs may hide an entering column or invent convergence.
      if (fresh) break;
      if (!refresh()) {
        rep.status = SolveStatus::NumericalFailure;
        rep.iterations = iter;
        rep.note = "singular basis at refactorization";
        return rep;
      }
      fresh = true;
      since_refresh = 0;
      continue;
    }

    // Two-pass ratio test. Pass 1 finds the tightest ratio; pass 2 takes the
    // largest pivot among near ties, so a noise-sized entry never wins while
    // a safe pivot with the same ratio exists. Slightly negative basic values
    // are drift and count as zero.
    double best_ratio = kInf;
    for (int r = 0; r < m; ++r) {
      const double a = T(r, enter);
      if (a > opt.pivot_tol) {
        const double ratio = std::max(d(r), 0.0) / a;
        if (ratio < best_ratio) best_ratio = ratio;
      }
    }
    if (best_ratio == kInf) {
      if (!fresh) {
        if (!refresh()) {
          rep.status = SolveStatus::NumericalFailure;
          rep.iterations = iter;
          rep.note = "singular basis at refactorization";
          return rep;
        }
        fresh = true;
        since_refresh = 0;
        continue;
      }
      rep.status = SolveStatus::NumericalFailure;
      rep.iterations = iter;
      for (int r = 0; r < m; ++r) {
        if (basis[r] >= cols + slacks) rep.phase1_objective += std::max(d(r), 0.0);
      }
      rep.note = "phase-1 column without positive pivot";
      return rep;
    }
    const double window = best_ratio + 1e-9 * (1.0 + best_ratio);
    int leave = -1;
    double leave_pivot = 0.0;
    for (int r = 0; r < m; ++r) {
      const double a = T(r, enter);
      if (a > opt.pivot_tol && std::max(d(r), 0.0) / a <= window) {
        const bool better = bland ? (leave < 0 || basis[r] < basis[leave])
                                  : (a > leave_pivot ||
                                     (a == leave_pivot && leave >= 0 && basis[r] < basis[leave]));
        if (better) {
          leave = r;
          leave_pivot = a;
        }
      }
    }

    const double pivot = T(leave, enter);
    T.row(leave) /= pivot;
    d(leave) /= pivot;
    for (int r = 0; r < m; ++r) {
      if (r == leave) continue;
      const double f = T(r, enter);
      if (f != 0.0) {
        T.row(r) -= f * T.row(leave);
        d(r) -= f * d(leave);
      }
    }
    const double fc = redcost(enter);
    redcost -= fc * T.row(leave).transpose();
    basis[leave] = enter;
    fresh = false;
    ++since_refresh;

    if (fc * d(leave) > -1e-15) {
      if (++stall > opt.stall_limit && !bland) {
        bland = true;
        stall = 0;
      }
    } else {
      stall = 0;
    }
  }
  rep.iterations = iter;
  if (iter >= opt.max_iterations) {
    rep.status = SolveStatus::NumericalFailure;
    double attained = 0.0;
    for (int r = 0; r < m; ++r) {
      if (basis[r] >= cols + slacks) attained += d(r);
    }
    rep.phase1_objective = attained;
    rep.note = "iteration limit reached in phase 1";
    return rep;
  }

  // The loop only breaks on refreshed numbers, so the attained infeasibility
  // read off the artificial basics is the refactored value, not drift.
  double attained = 0.0;
  for (int r = 0; r < m; ++r) {
    if (basis[r] >= cols + slacks) attained += std::max(d(r), 0.0);
  }
  rep.phase1_objective = attained;

  if (attained > opt.feas_tol) {
    rep.status = SolveStatus::Infeasible;
    // Phase-1 duals off the artificial reduced costs: y_r = 1 - redcost(art_r)
    // in the flipped system. Verified against the pristine copy, not against
    // the tableau that produced them.
    Eigen::VectorXd y_flip(m);
    for (int r = 0; r < m; ++r) y_flip(r) = 1.0 - redcost(cols + slacks + r);
    const Eigen::VectorXd aggregated = S0.transpose() * y_flip;
    rep.farkas_column_max = aggregated.size() ? aggregated.maxCoeff() : 0.0;
    rep.farkas_gap = y_flip.dot(d0);
    Eigen::VectorXd y = y_flip;
    for (int r = 0; r < m; ++r) {
      if (flipped[r]) y(r) *= -1.0;
    }
    rep.farkas_eq = y.head(n_eq);
    rep.farkas_ub = y.segment(n_eq, n_ub);
    rep.certificate_checked =
        rep.farkas_column_max <= opt.feas_tol && rep.farkas_gap > 0.5 * opt.feas_tol;
    if (!rep.certificate_checked) {
      rep.status = SolveStatus::NumericalFailure;
      rep.note = "phase-1 optimum positive but certificate failed verification";
    }
    return rep;
  }

  // Feasible: read structural values off the basis and map back.
  Eigen::VectorXd z = Eigen::VectorXd::Zero(cols);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < cols) z(basis[r]) = std::max(d(r), 0.0);
  }
  rep.witness.resize(nv);
  for (int j = 0; j < nv; ++j) {
    const VarMap& v = vmap[j];
    switch (v.kind) {
      case VarMap::Fixed: rep.witness(j) = v.offset; break;
      case VarMap::Shifted: rep.witness(j) = v.offset + z(v.col); break;
      case VarMap::Negated: rep.witness(j) = v.offset - z(v.col); break;
      case VarMap::Free: rep.witness(j) = z(v.col) - z(v.col + 1); break;
    }
  }
  rep.status = SolveStatus::Feasible;
  return rep;
}

}  // namespace adlp
