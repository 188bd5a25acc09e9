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

#include "adlp/lp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "adlp/connection.hpp"
#include "adlp/enumerator.hpp"

namespace adlp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double v = 1.0;
  for (int j = 0; j < k; ++j) v = v * (n - j) / (j + 1);
  return v;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_short(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

GammaValue GammaValue::parse(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad gamma value: " + text);
  }
  if (pos != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad gamma value: " + text);
  }
  return GammaValue{v, text};
}

GammaValue GammaValue::of(double value) { return GammaValue{value, fmt(value)}; }

const char* constraint_set_name(ConstraintSet set) {
  switch (set) {
    case ConstraintSet::PaperLiteral:
      return "paper-literal";
    case ConstraintSet::Strengthened:
      return "strengthened";
  }
  return "unknown";
}

std::int64_t LPProblem::pair_count() const {
  const std::int64_t N = std::int64_t{1} << (2 * n);
  return N * (N + 1) / 2;
}

int LPProblem::var_count() const {
  return static_cast<int>(pair_count()) + gamma_count * 2 * (n + 1);
}

std::int64_t LPProblem::pair_index(std::uint32_t sigma, std::uint32_t tau) const {
  const std::int64_t N = std::int64_t{1} << (2 * n);
  const std::int64_t s = sigma, t = tau;
  return s * N - s * (s - 1) / 2 + (t - s);
}

void LPProblem::pair_decode(std::int64_t index, std::uint32_t& sigma, std::uint32_t& tau) const {
  const std::int64_t N = std::int64_t{1} << (2 * n);
  auto base = [N](std::int64_t s) { return s * N - s * (s - 1) / 2; };
  const long double disc = static_cast<long double>(2 * N + 1) * (2 * N + 1) - 8.0L * index;
  std::int64_t s = static_cast<std::int64_t>(((2 * N + 1) - std::sqrt(std::max(0.0L, disc))) / 2);
  s = std::clamp<std::int64_t>(s, 0, N - 1);
  while (s + 1 < N && base(s + 1) <= index) ++s;
  while (s > 0 && base(s) > index) --s;
  sigma = static_cast<std::uint32_t>(s);
  tau = static_cast<std::uint32_t>(s + (index - base(s)));
}

int LPProblem::a_var(int k, int i) const {
  return static_cast<int>(pair_count()) + k * 2 * (n + 1) + i;
}

int LPProblem::b_var(int k, int i) const { return a_var(k, i) + (n + 1); }

std::string LPProblem::var_name(int var) const {
  const std::int64_t pairs = pair_count();
  if (var < pairs) {
    std::uint32_t s = 0, t = 0;
    pair_decode(var, s, t);
    return "y_" + std::to_string(s) + "_" + std::to_string(t);
  }
  const int r = var - static_cast<int>(pairs);
  const int k = r / (2 * (n + 1));
  const int j = r % (2 * (n + 1));
  if (j <= n) return "A_" + std::to_string(j) + "_" + std::to_string(k);
  return "B_" + std::to_string(j - n - 1) + "_" + std::to_string(k);
}

LPProblem assemble(const FeasibilityQuery& q) {
  if (q.n < 1 || q.n > 6) throw std::invalid_argument("n out of range [1, 6]");
  if (q.M < 1 || q.M > (1 << q.n)) throw std::invalid_argument("M out of range [1, 2^n]");
  if (q.t < 0 || q.t > q.n) throw std::invalid_argument("t out of range [0, n]");
  if (!(q.c >= 0.0) || !std::isfinite(q.c)) throw std::invalid_argument("c must be finite and nonnegative");
  if (q.gammas.empty()) throw std::invalid_argument("at least one gamma is required");
  for (const auto& g : q.gammas) {
    if (!(g.value > 0.0 && g.value < 1.0)) {
      throw std::invalid_argument("gamma must lie in (0, 1): " + g.text);
    }
  }

  LPProblem p;
  p.query = q;
  p.n = q.n;
  p.gamma_count = static_cast<int>(q.gammas.size());
  p.lower.assign(p.var_count(), -kInf);
  p.upper.assign(p.var_count(), kInf);

  const double M = q.M;
  const double M2 = M * M;
  const bool strong = q.set == ConstraintSet::Strengthened;

  // tr(I P)^2 anchors the tensor square.
  const std::int64_t anchor = p.pair_index(0, 0);
  p.lower[anchor] = M2;
  p.upper[anchor] = M2;

  for (int k = 0; k < p.gamma_count; ++k) {
    const double gamma = q.gammas[k].value;
    const ConnectionMatrix mA = build_connection(ConnectionKind::A, q.n, gamma);
    const ConnectionMatrix mB = build_connection(ConnectionKind::B, q.n, gamma);
    const std::string suffix = "_" + std::to_string(k);

    // Equality rows tie the shared pair variables to the per-gamma
    // enumerator variables. Dividing row i by gamma^i keeps coefficients at
    // unit scale; the enumerator variables absorb the same power.
    double inv_pow = 1.0;
    for (int i = 0; i <= q.n; ++i) {
      LinRow ra;
      ra.name = "eqA_" + std::to_string(i) + suffix;
      for (const ConnectionEntry& e : mA.rows[i]) {
        ra.terms.push_back({static_cast<int>(p.pair_index(e.sigma, e.tau)), e.value * inv_pow});
      }
      ra.terms.push_back({p.a_var(k, i), -M2});
      p.equalities.push_back(std::move(ra));

      LinRow rb;
      rb.name = "eqB_" + std::to_string(i) + suffix;
      for (const ConnectionEntry& e : mB.rows[i]) {
        rb.terms.push_back({static_cast<int>(p.pair_index(e.sigma, e.tau)), e.value * inv_pow});
      }
      rb.terms.push_back({p.b_var(k, i), -M});
      p.equalities.push_back(std::move(rb));

      inv_pow /= gamma;
    }

    // B_i - A_i <= c gamma^(t+1) for i = 0..t, written over the scaled
    // variables so coefficients stay within [0, 1].
    const double cap = q.c * std::pow(gamma, q.t + 1);
    double gpow = 1.0;
    for (int i = 0; i <= q.t; ++i) {
      LinRow r;
      r.name = "gap_" + std::to_string(i) + suffix;
      r.terms.push_back({p.b_var(k, i), gpow});
      r.terms.push_back({p.a_var(k, i), -gpow});
      r.rhs = cap;
      p.inequalities.push_back(std::move(r));
      gpow *= gamma;
    }

    // sum_i B_i <= 1: trace of the channel output against the projector.
    LinRow bsum;
    bsum.name = "bsum" + suffix;
    gpow = 1.0;
    for (int i = 0; i <= q.n; ++i) {
      bsum.terms.push_back({p.b_var(k, i), gpow});
      gpow *= gamma;
    }
    bsum.rhs = 1.0;
    p.inequalities.push_back(std::move(bsum));

    for (int i = 0; i <= q.n; ++i) {
      p.lower[p.a_var(k, i)] = 0.0;
      p.upper[p.b_var(k, i)] = binomial(q.n, i);
    }

    if (strong) {
      // A_0 >= (1-gamma)^n: the identity Kraus term alone contributes
      // ((1+s)/2)^(2n) >= (1-gamma)^n of survival weight.
      p.lower[p.a_var(k, 0)] = std::pow(1.0 - gamma, q.n);
      double sp = 1.0;
      for (int i = 0; i <= q.n; ++i) {
        LinRow r;
        r.name = "ab_" + std::to_string(i) + suffix;
        r.terms.push_back({p.a_var(k, i), sp});
        r.terms.push_back({p.b_var(k, i), -sp});
        p.inequalities.push_back(std::move(r));
        sp *= gamma;
      }
    }
  }

  if (strong) {
    // Diagonal pairs are squares tr(sigma P)^2 in [0, M^2]; their total is
    // the purity sum 2^n tr(P^2) = 2^n M.
    const std::uint32_t N = 1u << (2 * q.n);
    LinRow purity;
    purity.name = "purity";
    for (std::uint32_t s = 0; s < N; ++s) {
      const std::int64_t d = p.pair_index(s, s);
      p.lower[d] = std::max(p.lower[d], 0.0);
      p.upper[d] = std::min(p.upper[d], M2);
      purity.terms.push_back({static_cast<int>(d), 1.0});
    }
    purity.rhs = std::pow(2.0, q.n) * M;
    p.equalities.push_back(std::move(purity));
  }

  return p;
}

double evaluate_violation(const LPProblem& p, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != p.var_count()) {
    throw std::invalid_argument("witness length mismatch");
  }
  double worst = 0.0;
  for (const LinRow& r : p.equalities) {
    double lhs = 0.0;
    for (const LinTerm& t : r.terms) lhs += t.coeff * x[t.var];
    worst = std::max(worst, std::abs(lhs - r.rhs));
  }
  for (const LinRow& r : p.inequalities) {
    double lhs = 0.0;
    for (const LinTerm& t : r.terms) lhs += t.coeff * x[t.var];
    worst = std::max(worst, lhs - r.rhs);
  }
  for (int v = 0; v < p.var_count(); ++v) {
    if (p.lower[v] > -kInf) worst = std::max(worst, p.lower[v] - x[v]);
    if (p.upper[v] < kInf) worst = std::max(worst, x[v] - p.upper[v]);
  }
  return worst;
}

LPVerdict solve(const LPProblem& p, const SolveOptions& opt) {
  const int nv = p.var_count();
  // Only variables touched by some row matter; the rest sit untouched at any
  // value inside their bounds. Compressing them out keeps the dense solver
  // at a few thousand columns instead of the full pair catalog.
  std::vector<int> to_ref(nv, -1);
  std::vector<int> ref;
  auto mark = [&](const std::vector<LinRow>& rows) {
    for (const LinRow& r : rows) {
      for (const LinTerm& t : r.terms) {
        if (to_ref[t.var] < 0) {
          to_ref[t.var] = static_cast<int>(ref.size());
          ref.push_back(t.var);
        }
      }
    }
  };
  mark(p.equalities);
  mark(p.inequalities);

  const int nr = static_cast<int>(ref.size());
  BoundedLP lp;
  lp.eq_A = Eigen::MatrixXd::Zero(static_cast<int>(p.equalities.size()), nr);
  lp.eq_b = Eigen::VectorXd::Zero(static_cast<int>(p.equalities.size()));
  lp.ub_A = Eigen::MatrixXd::Zero(static_cast<int>(p.inequalities.size()), nr);
  lp.ub_b = Eigen::VectorXd::Zero(static_cast<int>(p.inequalities.size()));
  lp.lower = Eigen::VectorXd::Constant(nr, -kInf);
  lp.upper = Eigen::VectorXd::Constant(nr, kInf);
  for (int j = 0; j < nr; ++j) {
    lp.lower(j) = p.lower[ref[j]];
    lp.upper(j) = p.upper[ref[j]];
  }
  for (std::size_t i = 0; i < p.equalities.size(); ++i) {
    const LinRow& r = p.equalities[i];
    for (const LinTerm& t : r.terms) lp.eq_A(static_cast<int>(i), to_ref[t.var]) += t.coeff;
    lp.eq_b(static_cast<int>(i)) = r.rhs;
  }
  for (std::size_t i = 0; i < p.inequalities.size(); ++i) {
    const LinRow& r = p.inequalities[i];
    for (const LinTerm& t : r.terms) lp.ub_A(static_cast<int>(i), to_ref[t.var]) += t.coeff;
    lp.ub_b(static_cast<int>(i)) = r.rhs;
  }

  const SolveReport rep = find_feasible_point(lp, opt);

  LPVerdict v;
  v.status = rep.status;
  v.phase1_objective = rep.phase1_objective;
  v.iterations = rep.iterations;
  v.note = rep.note;

  if (rep.status == SolveStatus::Feasible) {
    std::vector<double> x(nv, 0.0);
    for (int var = 0; var < nv; ++var) {
      if (to_ref[var] >= 0) {
        x[var] = rep.witness(to_ref[var]);
      } else if (p.lower[var] > 0.0) {
        x[var] = p.lower[var];
      } else if (p.upper[var] < 0.0) {
        x[var] = p.upper[var];
      }
    }
    // The simplex answer is never trusted bare; the point is re-checked
    // against every row and bound of the assembled system.
    v.revalidation_max_violation = evaluate_violation(p, x);
    if (v.revalidation_max_violation <= opt.feas_tol) {
      v.witness = std::move(x);
    } else {
      v.status = SolveStatus::NumericalFailure;
      v.note = "witness re-validation exceeded tolerance: " + fmt_short(v.revalidation_max_violation);
    }
  } else if (rep.status == SolveStatus::Infeasible) {
    std::ostringstream os;
    os << "phase-1 optimum " << fmt_short(rep.phase1_objective) << " over "
       << p.equalities.size() << " equalities and " << p.inequalities.size()
       << " inequalities; Farkas aggregate has column max " << fmt_short(rep.farkas_column_max)
       << " and gap " << fmt_short(rep.farkas_gap)
       << (rep.certificate_checked ? "; certificate verified" : "; certificate unverified");
    v.certificate = os.str();
  }
  return v;
}

std::vector<double> witness_from_code(const LPProblem& p, const Code& code) {
  if (code.n() != p.n) throw std::invalid_argument("code size does not match the system");
  if (code.M() != p.query.M) throw std::invalid_argument("code rank does not match the system");
  const AuxVector aux = aux_vector(code);
  const std::uint32_t N = 1u << (2 * p.n);
  std::vector<double> x(p.var_count(), 0.0);
  for (std::uint32_t s = 0; s < N; ++s) {
    for (std::uint32_t t = s; t < N; ++t) {
      x[p.pair_index(s, t)] = aux.pair_value(s, t);
    }
  }
  for (int k = 0; k < p.gamma_count; ++k) {
    const double gamma = p.query.gammas[k].value;
    const auto [ea, eb] = ad_enumerators(code, gamma);
    double gpow = 1.0;
    for (int i = 0; i <= p.n; ++i) {
      x[p.a_var(k, i)] = ea.values[i] / gpow;
      x[p.b_var(k, i)] = eb.values[i] / gpow;
      gpow *= gamma;
    }
  }
  return x;
}

ScanResult scan_threshold(const std::function<SolveStatus(double)>& probe_fn, double c_lo,
                          double c_hi, double resolution) {
  ScanResult out;
  if (!(c_lo >= 0.0) || !(c_hi >= c_lo) || !(resolution > 0.0)) {
    out.kind = ScanResult::Failure;
    out.note = "bad scan interval";
    return out;
  }
  auto probe = [&](double c) {
    ++out.evaluations;
    return probe_fn(c);
  };

  const SolveStatus lo_status = probe(c_lo);
  if (lo_status == SolveStatus::NumericalFailure) {
    out.kind = ScanResult::Failure;
    out.note = "solver failed at the lower endpoint";
    return out;
  }
  if (lo_status == SolveStatus::Feasible) {
    out.kind = ScanResult::NoBracket;
    out.note = "already feasible at c = " + fmt_short(c_lo);
    return out;
  }
  double lo = c_lo;  // infeasible
  if (c_hi > c_lo) {
    const SolveStatus hi_status = probe(c_hi);
    if (hi_status == SolveStatus::NumericalFailure) {
      out.kind = ScanResult::Failure;
      out.note = "solver failed at the upper endpoint";
      return out;
    }
    if (hi_status == SolveStatus::Infeasible) {
      out.kind = ScanResult::Found;
      out.c = c_hi;
      out.note = "still infeasible at the upper endpoint";
      return out;
    }
    double hi = c_hi;  // feasible
    while (hi - lo > resolution) {
      const double mid = lo + (hi - lo) / 2;
      const SolveStatus st = probe(mid);
      if (st == SolveStatus::NumericalFailure) {
        out.kind = ScanResult::Failure;
        out.note = "solver failed at c = " + fmt_short(mid);
        return out;
      }
      (st == SolveStatus::Infeasible ? lo : hi) = mid;
    }
  }
  out.kind = ScanResult::Found;
  out.c = lo;
  return out;
}

ScanResult max_ruled_out_c(const FeasibilityQuery& base, double c_lo, double c_hi,
                           double resolution, const SolveOptions& opt) {
  return scan_threshold(
      [&](double c) {
        FeasibilityQuery q = base;
        q.c = c;
        return solve(assemble(q), opt).status;
      },
      c_lo, c_hi, resolution);
}

void export_lp(const LPProblem& p, std::ostream& out) {
  const FeasibilityQuery& q = p.query;
  out << "\\ " << kToolVersion << " feasibility system\n";
  out << "\\ n: " << q.n << "\n";
  out << "\\ M: " << q.M << "\n";
  out << "\\ t: " << q.t << "\n";
  out << "\\ c: " << fmt(q.c) << "\n";
  out << "\\ constraint-set: " << constraint_set_name(q.set) << "\n";
  out << "\\ gammas:";
  for (std::size_t k = 0; k < q.gammas.size(); ++k) out << (k ? "," : " ") << q.gammas[k].text;
  out << "\n";
  out << "\\ A_<i>_<k> and B_<i>_<k> hold the weight-i enumerators at gamma_k"
         " divided by gamma_k^i\n";
  out << "Minimize\n obj: 0 y_0_0\nSubject To\n";

  auto emit_row = [&](const LinRow& r, const char* rel) {
    out << " " << r.name << ":";
    int on_line = 0;
    for (const LinTerm& t : r.terms) {
      if (on_line == 8) {
        out << "\n  ";
        on_line = 0;
      }
      const double c = t.coeff;
      out << (c < 0 ? " - " : " + ") << fmt(std::abs(c)) << " " << p.var_name(t.var);
      ++on_line;
    }
    out << " " << rel << " " << fmt(r.rhs) << "\n";
  };
  for (const LinRow& r : p.equalities) emit_row(r, "=");
  for (const LinRow& r : p.inequalities) emit_row(r, "<=");

  out << "Bounds\n";
  for (int v = 0; v < p.var_count(); ++v) {
    const double lo = p.lower[v], hi = p.upper[v];
    const std::string name = p.var_name(v);
    if (lo == hi) {
      out << " " << name << " = " << fmt(lo) << "\n";
    } else if (lo == -kInf && hi == kInf) {
      out << " " << name << " free\n";
    } else if (hi == kInf) {
      out << " " << name << " >= " << fmt(lo) << "\n";
    } else if (lo == -kInf) {
      out << " -inf <= " << name << " <= " << fmt(hi) << "\n";
    } else {
      out << " " << fmt(lo) << " <= " << name << " <= " << fmt(hi) << "\n";
    }
  }
  out << "End\n";
}

namespace {

bool parse_double(const std::string& tok, double& v) {
  if (tok == "inf" || tok == "+inf") {
    v = kInf;
    return true;
  }
  if (tok == "-inf") {
    v = -kInf;
    return true;
  }
  std::size_t pos = 0;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

std::string lower_copy(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void bad_lp(const std::string& what) { throw std::runtime_error("lp import: " + what); }

}  // namespace

LPProblem import_lp(std::istream& in) {
  std::map<std::string, std::string> header;
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t cut = line.find('\\');
    if (cut != std::string::npos) {
      std::string comment = line.substr(cut + 1);
      const std::size_t colon = comment.find(':');
      if (colon != std::string::npos) {
        std::string key = comment.substr(0, colon);
        std::string val = comment.substr(colon + 1);
        auto trim = [](std::string& s) {
          const auto b = s.find_first_not_of(" \t");
          const auto e = s.find_last_not_of(" \t");
          s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(val);
        if (!key.empty()) header[key] = val;
      }
      line = line.substr(0, cut);
    }
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }

  for (const char* key : {"n", "M", "t", "c", "constraint-set", "gammas"}) {
    if (!header.count(key)) bad_lp(std::string("missing header field ") + key);
  }

  LPProblem p;
  p.query.n = std::stoi(header["n"]);
  p.query.M = std::stoi(header["M"]);
  p.query.t = std::stoi(header["t"]);
  p.query.c = std::stod(header["c"]);
  if (header["constraint-set"] == constraint_set_name(ConstraintSet::Strengthened)) {
    p.query.set = ConstraintSet::Strengthened;
  } else if (header["constraint-set"] == constraint_set_name(ConstraintSet::PaperLiteral)) {
    p.query.set = ConstraintSet::PaperLiteral;
  } else {
    bad_lp("unknown constraint set " + header["constraint-set"]);
  }
  {
    std::istringstream gs(header["gammas"]);
    std::string part;
    while (std::getline(gs, part, ',')) p.query.gammas.push_back(GammaValue::parse(part));
  }
  p.n = p.query.n;
  p.gamma_count = static_cast<int>(p.query.gammas.size());
  if (p.n < 1 || p.n > 6 || p.gamma_count < 1) bad_lp("header sizes out of range");
  // LP-format default bounds; the Bounds section overrides them per variable.
  p.lower.assign(p.var_count(), 0.0);
  p.upper.assign(p.var_count(), kInf);

  auto var_id = [&](const std::string& name) -> int {
    std::uint32_t a = 0, b = 0;
    char kind = 0;
    if (std::sscanf(name.c_str(), "y_%u_%u", &a, &b) == 2) {
      kind = 'y';
    } else if (std::sscanf(name.c_str(), "A_%u_%u", &a, &b) == 2) {
      kind = 'A';
    } else if (std::sscanf(name.c_str(), "B_%u_%u", &a, &b) == 2) {
      kind = 'B';
    } else {
      bad_lp("unrecognized variable " + name);
    }
    const std::uint32_t N = 1u << (2 * p.n);
    if (kind == 'y') {
      if (a > b || b >= N) bad_lp("pair out of range in " + name);
      return static_cast<int>(p.pair_index(a, b));
    }
    if (a > static_cast<std::uint32_t>(p.n) || b >= static_cast<std::uint32_t>(p.gamma_count)) {
      bad_lp("enumerator index out of range in " + name);
    }
    return kind == 'A' ? p.a_var(static_cast<int>(b), static_cast<int>(a))
                       : p.b_var(static_cast<int>(b), static_cast<int>(a));
  };

  std::size_t pos = 0;
  auto peek = [&]() -> const std::string& {
    static const std::string kEmpty;
    return pos < tokens.size() ? tokens[pos] : kEmpty;
  };
  auto next = [&]() -> std::string {
    if (pos >= tokens.size()) bad_lp("unexpected end of file");
    return tokens[pos++];
  };
  auto is_rel = [](const std::string& t) { return t == "=" || t == "<=" || t == ">="; };

  const std::string head = lower_copy(next());
  if (head != "minimize" && head != "maximize") bad_lp("expected an objective section");
  while (pos < tokens.size()) {
    if (lower_copy(peek()) == "subject") {
      ++pos;
      if (lower_copy(peek()) == "to") ++pos;
      break;
    }
    if (lower_copy(peek()) == "st" || lower_copy(peek()) == "s.t.") {
      ++pos;
      break;
    }
    ++pos;  // objective content is irrelevant to feasibility
  }

  while (pos < tokens.size()) {
    const std::string low = lower_copy(peek());
    if (low == "bounds" || low == "end") break;
    std::string name = next();
    if (!name.empty() && name.back() == ':') {
      name.pop_back();
    } else if (peek() == ":") {
      ++pos;
    } else {
      bad_lp("row name " + name + " lacks a colon");
    }
    LinRow row;
    row.name = name;
    std::string rel;
    double sign = 1.0;
    bool have_sign = false;
    while (true) {
      std::string tok = next();
      if (is_rel(tok)) {
        rel = tok;
        double rhs = 0.0;
        if (!parse_double(next(), rhs)) bad_lp("bad right-hand side in row " + name);
        row.rhs = rhs;
        break;
      }
      if (tok == "+" || tok == "-") {
        sign = tok == "-" ? -sign : sign;
        have_sign = true;
        continue;
      }
      double coeff = 1.0;
      if (parse_double(tok, coeff)) {
        tok = next();
        if (is_rel(tok) || tok == "+" || tok == "-") bad_lp("dangling coefficient in row " + name);
      }
      row.terms.push_back({var_id(tok), sign * coeff});
      sign = 1.0;
      have_sign = false;
    }
    if (have_sign) bad_lp("dangling sign in row " + name);
    if (rel == ">=") {
      for (LinTerm& t : row.terms) t.coeff = -t.coeff;
      row.rhs = -row.rhs;
      rel = "<=";
    }
    if (rel == "=") {
      p.equalities.push_back(std::move(row));
    } else {
      p.inequalities.push_back(std::move(row));
    }
  }

  if (lower_copy(peek()) == "bounds") {
    ++pos;
    while (pos < tokens.size() && lower_copy(peek()) != "end") {
      std::string tok = next();
      double num = 0.0;
      if (parse_double(tok, num)) {
        // num <= var <= num
        if (next() != "<=") bad_lp("expected <= after a bound value");
        const int v = var_id(next());
        if (next() != "<=") bad_lp("expected <= after a bounded variable");
        double hi = 0.0;
        if (!parse_double(next(), hi)) bad_lp("bad upper bound");
        p.lower[v] = num;
        p.upper[v] = hi;
        continue;
      }
      const int v = var_id(tok);
      const std::string op = lower_copy(next());
      if (op == "free") {
        p.lower[v] = -kInf;
        p.upper[v] = kInf;
      } else if (op == "=") {
        double val = 0.0;
        if (!parse_double(next(), val)) bad_lp("bad fixed bound");
        p.lower[v] = val;
        p.upper[v] = val;
      } else if (op == ">=") {
        double val = 0.0;
        if (!parse_double(next(), val)) bad_lp("bad lower bound");
        p.lower[v] = val;
      } else if (op == "<=") {
        double val = 0.0;
        if (!parse_double(next(), val)) bad_lp("bad upper bound");
        p.upper[v] = val;
      } else {
        bad_lp("unrecognized bound form near " + tok);
      }
    }
  }
  if (lower_copy(peek()) != "end") bad_lp("missing End marker");
  return p;
}

std::string verdict_to_json(const LPProblem& p, const LPVerdict& v, const SolveOptions& opt) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["tool"] = kToolVersion;
  j["kind"] = "feasibility";
  ordered_json q;
  q["n"] = p.query.n;
  q["M"] = p.query.M;
  q["t"] = p.query.t;
  q["c"] = p.query.c;
  q["constraintSet"] = constraint_set_name(p.query.set);
  ordered_json gl = ordered_json::array();
  for (const auto& g : p.query.gammas) gl.push_back(g.text);
  q["gammas"] = gl;
  j["query"] = q;
  j["tolerances"] = {{"feasibility", opt.feas_tol}, {"pivot", opt.pivot_tol}};
  j["status"] = v.status == SolveStatus::Feasible     ? "Feasible"
                : v.status == SolveStatus::Infeasible ? "Infeasible"
                                                      : "NumericalFailure";
  j["iterations"] = v.iterations;
  j["phase1Objective"] = v.phase1_objective;
  if (!v.note.empty()) j["note"] = v.note;

  if (v.status == SolveStatus::Infeasible) {
    j["certificate"] = v.certificate;
  }
  if (v.status == SolveStatus::Feasible) {
    j["revalidationMaxViolation"] = v.revalidation_max_violation;
    // Referenced variables carry the whole system; every other catalog
    // variable sits at 0 (or at its pinned value).
    std::vector<char> used(p.var_count(), 0);
    for (const LinRow& r : p.equalities)
      for (const LinTerm& t : r.terms) used[t.var] = 1;
    for (const LinRow& r : p.inequalities)
      for (const LinTerm& t : r.terms) used[t.var] = 1;
    ordered_json w;
    for (int var = 0; var < p.var_count(); ++var) {
      if (used[var]) w[p.var_name(var)] = v.witness[var];
    }
    j["witness"] = w;
    ordered_json el = ordered_json::array();
    for (int k = 0; k < p.gamma_count; ++k) {
      ordered_json e;
      e["gamma"] = p.query.gammas[k].text;
      ordered_json av = ordered_json::array(), bv = ordered_json::array();
      double gpow = 1.0;
      for (int i = 0; i <= p.n; ++i) {
        av.push_back(v.witness[p.a_var(k, i)] * gpow);
        bv.push_back(v.witness[p.b_var(k, i)] * gpow);
        gpow *= p.query.gammas[k].value;
      }
      e["A"] = av;
      e["B"] = bv;
      el.push_back(e);
    }
    j["enumerators"] = el;
  }
  return j.dump(2);
}

}  // namespace adlp
