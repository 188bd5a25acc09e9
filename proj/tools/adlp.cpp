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

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Dense>
#include <json.hpp>

#include "adlp/codes.hpp"
#include "adlp/connection.hpp"
#include "adlp/enumerator.hpp"
#include "adlp/kraus.hpp"
#include "adlp/lp.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitNumerical = 3;

std::vector<adlp::GammaValue> parse_gammas(const std::string& list) {
  std::vector<adlp::GammaValue> out;
  std::istringstream is(list);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (!part.empty()) out.push_back(adlp::GammaValue::parse(part));
  }
  if (out.empty()) throw std::invalid_argument("empty gamma list");
  return out;
}

adlp::ConstraintSet parse_set(const std::string& name) {
  if (name == "paper" || name == "paper-literal") return adlp::ConstraintSet::PaperLiteral;
  if (name == "strengthened") return adlp::ConstraintSet::Strengthened;
  throw std::invalid_argument("unknown constraint set: " + name);
}

void deliver(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file " + out_path);
  f << text << "\n";
}

adlp::Code load_code(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    return adlp::validate(adlp::load_code_json(arg));
  }
  return adlp::validate(adlp::builtin(arg));
}

// Seeded Gaussian via the polar-free Box-Muller map over raw 64-bit draws;
// identical streams on every platform, unlike std::normal_distribution.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double next() {
    const double u = ((rng_() >> 11) + 0.5) * 0x1p-53;  // (0, 1)
    const double v = ((rng_() >> 11) + 0.5) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
  }

 private:
  std::mt19937_64 rng_;
};

adlp::Code random_code(int n, int M, GaussianSource& gauss) {
  const int dim = 1 << n;
  Eigen::MatrixXcd g(dim, M);
  for (int j = 0; j < M; ++j) {
    for (int i = 0; i < dim; ++i) g(i, j) = std::complex<double>(gauss.next(), gauss.next());
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, M);
  adlp::CodeSpec spec;
  spec.n = n;
  spec.codewords = std::move(q);
  return adlp::validate(spec);
}

struct EnumerateArgs {
  std::string code;
  std::string gamma;
  bool sl = false;
  std::string format = "json";
  std::string out;
};

int run_enumerate(const EnumerateArgs& a) {
  const adlp::Code code = load_code(a.code);
  const adlp::GammaValue gamma = adlp::GammaValue::parse(a.gamma);
  adlp::check_gamma(gamma.value);
  const auto [ea, eb] = adlp::ad_enumerators(code, gamma.value);
  std::vector<double> asl, bsl;
  if (a.sl) {
    const auto [sa, sb] = adlp::sl_enumerators(code);
    asl = sa.values;
    bsl = sb.values;
  }

  if (a.format == "csv") {
    std::ostringstream os;
    os << "i,A,B";
    if (a.sl) os << ",A_SL,B_SL";
    for (int i = 0; i <= code.n(); ++i) {
      os << "\n" << i << "," << ea.values[i] << "," << eb.values[i];
      if (a.sl) os << "," << asl[i] << "," << bsl[i];
    }
    deliver(os.str(), a.out);
    return kExitOk;
  }
  if (a.format == "human") {
    std::ostringstream os;
    os << "code " << a.code << " ((" << code.n() << ", " << code.M() << ")), gamma = "
       << gamma.text << "\n";
    for (int i = 0; i <= code.n(); ++i) {
      os << "  i=" << i << "  A=" << ea.values[i] << "  B=" << eb.values[i];
      if (a.sl) os << "  A_SL=" << asl[i] << "  B_SL=" << bsl[i];
      os << "\n";
    }
    deliver(os.str(), a.out);
    return kExitOk;
  }

  ordered_json j;
  j["tool"] = adlp::kToolVersion;
  j["kind"] = "enumerate";
  j["code"] = a.code;
  j["n"] = code.n();
  j["M"] = code.M();
  j["gamma"] = gamma.text;
  j["A"] = ea.values;
  j["B"] = eb.values;
  if (a.sl) {
    j["A_SL"] = asl;
    j["B_SL"] = bsl;
  }
  deliver(j.dump(2), a.out);
  return kExitOk;
}

struct LemmaArgs {
  int n = 0;
  int M = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::string gammas;
  std::string out;
};

int run_lemma_check(const LemmaArgs& a) {
  if (a.n < 1 || a.n > 6) throw std::invalid_argument("n out of range [1, 6]");
  if (a.M < 1 || a.M > (1 << a.n)) throw std::invalid_argument("M out of range [1, 2^n]");
  if (a.trials < 1) throw std::invalid_argument("trials must be positive");
  const auto gammas = parse_gammas(a.gammas);
  for (const auto& g : gammas) adlp::check_gamma(g.value);

  constexpr double kTol = 1e-9;
  GaussianSource gauss(a.seed);
  double worst_a = 0.0, worst_b = 0.0;
  for (int trial = 0; trial < a.trials; ++trial) {
    const adlp::Code code = random_code(a.n, a.M, gauss);
    for (const auto& g : gammas) {
      const adlp::LemmaReport rep = adlp::verify_lemma(code, g.value, kTol);
      worst_a = std::max(worst_a, rep.residual_A);
      worst_b = std::max(worst_b, rep.residual_B);
    }
  }
  const bool pass = worst_a < kTol && worst_b < kTol;

  ordered_json j;
  j["tool"] = adlp::kToolVersion;
  j["kind"] = "lemma-check";
  j["n"] = a.n;
  j["M"] = a.M;
  j["trials"] = a.trials;
  j["seed"] = a.seed;
  ordered_json gl = ordered_json::array();
  for (const auto& g : gammas) gl.push_back(g.text);
  j["gammas"] = gl;
  j["tolerances"] = {{"residual", kTol}};
  j["maxResidualA"] = worst_a;
  j["maxResidualB"] = worst_b;
  j["pass"] = pass;
  deliver(j.dump(2), a.out);
  return pass ? kExitOk : kExitNumerical;
}

struct FeasibilityArgs {
  int n = 0, M = 0, t = 0;
  double c = 0.0;
  std::string gammas;
  std::string set = "paper";
  std::string export_lp_path;
  std::string out;
};

int run_feasibility(const FeasibilityArgs& a) {
  adlp::FeasibilityQuery q;
  q.n = a.n;
  q.M = a.M;
  q.t = a.t;
  q.c = a.c;
  q.gammas = parse_gammas(a.gammas);
  q.set = parse_set(a.set);
  const adlp::LPProblem p = adlp::assemble(q);
  if (!a.export_lp_path.empty()) {
    std::ofstream f(a.export_lp_path);
    if (!f) throw std::runtime_error("cannot open export file " + a.export_lp_path);
    adlp::export_lp(p, f);
  }
  const adlp::LPVerdict v = adlp::solve(p);
  deliver(adlp::verdict_to_json(p, v), a.out);
  switch (v.status) {
    case adlp::SolveStatus::Feasible:
      return kExitOk;
    case adlp::SolveStatus::Infeasible:
      return kExitInfeasible;
    case adlp::SolveStatus::NumericalFailure:
      break;
  }
  return kExitNumerical;
}

struct ScanArgs {
  int n = 0, M = 0, t = 0;
  std::string gammas;
  std::string set = "paper";
  double c_lo = 0.0, c_hi = 0.0, resolution = 0.0;
  std::string out;
};

int run_scan(const ScanArgs& a) {
  adlp::FeasibilityQuery q;
  q.n = a.n;
  q.M = a.M;
  q.t = a.t;
  q.gammas = parse_gammas(a.gammas);
  q.set = parse_set(a.set);
  const adlp::ScanResult r = adlp::max_ruled_out_c(q, a.c_lo, a.c_hi, a.resolution);

  ordered_json j;
  j["tool"] = adlp::kToolVersion;
  j["kind"] = "scan-c";
  j["n"] = a.n;
  j["M"] = a.M;
  j["t"] = a.t;
  ordered_json gl = ordered_json::array();
  for (const auto& g : q.gammas) gl.push_back(g.text);
  j["gammas"] = gl;
  j["constraintSet"] = adlp::constraint_set_name(q.set);
  j["cLo"] = a.c_lo;
  j["cHi"] = a.c_hi;
  j["resolution"] = a.resolution;
  const adlp::SolveOptions opt;
  j["tolerances"] = {{"feasibility", opt.feas_tol}, {"pivot", opt.pivot_tol}};
  j["result"] = r.kind == adlp::ScanResult::Found       ? "Found"
                : r.kind == adlp::ScanResult::NoBracket ? "NoBracket"
                                                        : "Failure";
  if (r.kind == adlp::ScanResult::Found) j["c"] = r.c;
  j["evaluations"] = r.evaluations;
  if (!r.note.empty()) j["note"] = r.note;
  deliver(j.dump(2), a.out);
  return r.kind == adlp::ScanResult::Failure ? kExitNumerical : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amplitude-damping weight enumerators and feasibility bounds"};
  app.require_subcommand(1);

  EnumerateArgs en;
  CLI::App* cmd_en = app.add_subcommand("enumerate", "compute A and B for one code and gamma");
  cmd_en->add_option("--code", en.code, "builtin name or JSON code file")->required();
  cmd_en->add_option("--gamma", en.gamma, "damping parameter in [0, 1]")->required();
  cmd_en->add_flag("--sl", en.sl, "include the Pauli-weight enumerators");
  cmd_en->add_option("--format", en.format, "json, csv, or human")
      ->check(CLI::IsMember({"json", "csv", "human"}));
  cmd_en->add_option("--out", en.out, "write the report to a file");

  LemmaArgs lm;
  CLI::App* cmd_lm = app.add_subcommand("lemma-check", "verify the connection identities on random codes");
  cmd_lm->add_option("--n", lm.n, "qubit count")->required();
  cmd_lm->add_option("--M", lm.M, "code rank")->required();
  cmd_lm->add_option("--trials", lm.trials, "number of random codes")->required();
  cmd_lm->add_option("--seed", lm.seed, "RNG seed")->required();
  cmd_lm->add_option("--gammas", lm.gammas, "comma-separated damping parameters")->required();
  cmd_lm->add_option("--out", lm.out, "write the report to a file");

  FeasibilityArgs fe;
  CLI::App* cmd_fe = app.add_subcommand("feasibility", "decide the (t,c) feasibility system");
  cmd_fe->add_option("--n", fe.n, "qubit count")->required();
  cmd_fe->add_option("--M", fe.M, "code rank")->required();
  cmd_fe->add_option("--t", fe.t, "protected weight range end")->required();
  cmd_fe->add_option("--c", fe.c, "approximation constant")->required();
  cmd_fe->add_option("--gammas", fe.gammas, "comma-separated damping parameters")->required();
  cmd_fe->add_option("--constraint-set", fe.set, "paper or strengthened");
  cmd_fe->add_option("--export-lp", fe.export_lp_path, "also write the system in LP format");
  cmd_fe->add_option("--out", fe.out, "write the report to a file");

  ScanArgs sc;
  CLI::App* cmd_sc = app.add_subcommand("scan-c", "largest ruled-out c by bisection");
  cmd_sc->add_option("--n", sc.n, "qubit count")->required();
  cmd_sc->add_option("--M", sc.M, "code rank")->required();
  cmd_sc->add_option("--t", sc.t, "protected weight range end")->required();
  cmd_sc->add_option("--gammas", sc.gammas, "comma-separated damping parameters")->required();
  cmd_sc->add_option("--constraint-set", sc.set, "paper or strengthened");
  cmd_sc->add_option("--c-lo", sc.c_lo, "lower end of the bracket")->required();
  cmd_sc->add_option("--c-hi", sc.c_hi, "upper end of the bracket")->required();
  cmd_sc->add_option("--resolution", sc.resolution, "bracket width to stop at")->required();
  cmd_sc->add_option("--out", sc.out, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*cmd_en) return run_enumerate(en);
    if (*cmd_lm) return run_lemma_check(lm);
    if (*cmd_fe) return run_feasibility(fe);
    if (*cmd_sc) return run_scan(sc);
  } catch (const adlp::CodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
