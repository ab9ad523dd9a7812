// Copyright 2026 The qts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "qts/circuit_io.hpp"
#include "qts/optical_io.hpp"
#include "qts/qudit_gates.hpp"
#include "qts/report.hpp"

#ifndef QTS_DEFAULT_PTS_PARAMS
#define QTS_DEFAULT_PTS_PARAMS "data/postselected_ts_params.json"
#endif

namespace {

using namespace qts;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ReportFormat parse_format(const std::string& s) {
  if (s == "human") return ReportFormat::kHuman;
  if (s == "json") return ReportFormat::kJson;
  throw UsageError("--format must be human or json");
}

PtsParameters load_params(const std::string& path) {
  try {
    return load_pts_parameters(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int verify_toffoli(unsigned n, double tol, const std::string& format, const std::string& path) {
  if (tol <= 0) throw UsageError("--tol must be positive");
  Circuit circ = [&] {
    if (path.empty()) {
      if (n < 2) throw UsageError("--n must be at least 2");
      return build_n_ts_circuit(n);
    }
    try {
      return load_circuit(path, resolve_named_gate);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }();
  const unsigned wires = static_cast<unsigned>(circ.dims().num_wires());
  if (wires < 3) throw UsageError("circuit needs at least two controls and a target");
  n = wires - 1;
  const auto rep = verify_decomposition(circ, oracle_n_toffoli_sign(n, ts_flipped_component(n)), n);
  std::cout << format_decomposition(rep, tol, parse_format(format));
  return rep.passed(tol) ? kPass : kFail;
}

struct Expectation {
  std::optional<Rational> exact;
  double probability;
  std::vector<std::size_t> flipped;
};

bool meets(const GateRealization& g, const Expectation& e, double tol) {
  bool ok = g.flipped_components == e.flipped && g.off_diagonal < tol && g.success_spread < 1e-9;
  if (e.exact) {
    ok = ok && g.exact_success && *g.exact_success == *e.exact;
  } else {
    ok = ok && std::abs(g.success_probability - e.probability) < 1e-6;
  }
  return ok;
}

int simulate_optical(const std::string& which, const std::string& params_file, double chi,
                     double tol, const std::string& format) {
  const ReportFormat f = parse_format(format);
  std::optional<GateRealization> g;
  Expectation e;
  if (which == "kerr") {
    g = kerr_cs_gate(chi);
    e = {Rational(1), 1.0, {3}};
    if (std::abs(chi) < 1e-15) e.flipped.clear();
  } else if (which == "deterministic") {
    g = deterministic_ts_gate();
    e = {Rational(1), 1.0, {5}};
  } else if (which == "heralded") {
    g = heralded_ts_gate();
    e = {Rational(1, 32), 1.0 / 32, {1}};
  } else if (which == "postselected-cs") {
    g = postselected_cs_gate();
    e = {Rational(1, 9), 1.0 / 9, {3}};
  } else if (which == "naive-chain") {
    g = naive_postselected_ts_gate();
    e = {Rational(1, 162), 1.0 / 162, {1}};
  } else if (which == "postselected-ts") {
    g = pts_gate(load_params(params_file));
    e = {std::nullopt, 1.0 / 72, {0}};
  } else {
    throw UsageError("unknown construction '" + which + "'");
  }
  std::cout << format_realization(*g, f);
  const bool ok = meets(*g, e, tol);
  if (f == ReportFormat::kHuman) std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kPass : kFail;
}

int solve_pts(std::uint64_t seed, unsigned starts, const std::string& out) {
  PtsSolveOptions opt;
  opt.seed = seed;
  opt.starts = starts;
  const PtsSolveResult r = solve_pts_reflectivities(opt);
  std::cerr << r.message << "\n";
  if (out.empty()) {
    std::cout << pts_parameters_to_json(r.params, &r);
  } else {
    save_pts_parameters(out, r.params, &r);
  }
  return r.converged ? kPass : kFail;
}

int report_all(const std::string& params_file, const std::string& format) {
  const ComparisonReport rep = success_probability_report(load_params(params_file));
  std::cout << format_report(rep, parse_format(format));
  return rep.all_match() ? kPass : kFail;
}

int run_optical(const std::string& path) {
  OpticalSetup setup;
  try {
    setup = load_optical(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::cout << format_optical(setup);
  if (!setup.input) {
    if (setup.circuit.is_linear()) {
      std::cout << "# single-photon transfer\n"
                << std::setprecision(6) << single_photon_transfer(setup.circuit).real() << "\n";
    }
    return kPass;
  }
  auto basis = std::make_shared<const FockBasis>(setup.circuit.modes(), setup.photons);
  const OpticalState out = evolve(setup.circuit, OpticalState::fock(basis, *setup.input));
  const PostSelection ps = postselect(out, setup.pattern);
  std::cout << std::setprecision(12) << "# probability " << ps.probability << "\n";
  if (auto r = Rational::approximate(ps.probability)) std::cout << "# exact " << r->to_string() << "\n";
  for (std::size_t i = 0; i < basis->size(); ++i) {
    const Complex a = ps.state.amplitudes()(static_cast<Eigen::Index>(i));
    if (std::abs(a) > 1e-12) {
      std::cout << occupation_label(basis->state(i)) << "  " << a.real();
      if (std::abs(a.imag()) > 1e-12) std::cout << (a.imag() < 0 ? " - " : " + ") << std::abs(a.imag()) << "i";
      std::cout << "\n";
    }
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qudit-assisted Toffoli verification and optical simulation"};
  app.require_subcommand(1);

  unsigned n = 2;
  double tol = 1e-10;
  std::string format = "human";
  std::string circuit_file;
  auto* verify = app.add_subcommand("verify-toffoli", "check the n-control T-S decomposition");
  verify->add_option("--n", n, "number of controls (>= 2)");
  verify->add_option("--tol", tol, "fidelity and deviation tolerance");
  verify->add_option("--format", format, "human or json");
  verify->add_option("--circuit", circuit_file, "verify a circuit file instead");

  std::string which;
  std::string params_file = QTS_DEFAULT_PTS_PARAMS;
  double chi = 3.141592653589793;
  std::uint64_t seed = 1;
  auto* sim = app.add_subcommand("simulate-optical", "simulate one optical construction");
  sim->add_option("which", which,
                  "kerr | deterministic | heralded | postselected-cs | naive-chain | postselected-ts")
      ->required();
  sim->add_option("--params-file", params_file, "reflectivities for postselected-ts");
  sim->add_option("--chi", chi, "Kerr phase for the kerr construction");
  sim->add_option("--tol", tol, "off-diagonal tolerance");
  sim->add_option("--format", format, "human or json");

  unsigned starts = 24;
  std::string out;
  auto* solve = app.add_subcommand("solve-pts", "solve the post-selected T-S reflectivities");
  solve->add_option("--seed", seed, "multistart seed");
  solve->add_option("--starts", starts, "random starts per orientation");
  solve->add_option("--out", out, "write parameters here instead of stdout");

  auto* report = app.add_subcommand("report-all", "success-probability and gate-count table");
  report->add_option("--params-file", params_file, "reflectivities for postselected-ts");
  report->add_option("--format", format, "human or json");

  std::string optical_file;
  auto* run = app.add_subcommand("run-optical", "evolve an optical description file");
  run->add_option("--file", optical_file, "optical description")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return verify_toffoli(n, tol, format, circuit_file);
    if (*sim) return simulate_optical(which, params_file, chi, tol, format);
    if (*solve) return solve_pts(seed, starts, out);
    if (*report) return report_all(params_file, format);
    if (*run) return run_optical(optical_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
