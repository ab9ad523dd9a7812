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

#include <cmath>
#include <cstdio>
#include <functional>
#include <nlohmann/json.hpp>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qts/optical_gates.hpp"
#include "qts/permanent.hpp"
#include "qts/postselected_ts.hpp"
#include "qts/toffoli.hpp"
#include "test_support.hpp"

using namespace qts;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  std::printf("%s  criterion %2d: %s [%s]\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

template <typename... T>
std::string fmt(const char* f, T... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Matrix sign_diag(std::size_t dim, std::size_t flipped) {
  Matrix m = Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m(static_cast<Eigen::Index>(flipped), static_cast<Eigen::Index>(flipped)) = -1.0;
  return m;
}

void qutrit_ts() {
  const Circuit c = build_ts_circuit();
  const double dev = max_abs(restrict_to_qubits(circuit_unitary(c), c.dims()) - sign_diag(8, 0b101));
  report(1, "qutrit T-S is diag(+-1) with -1 only at |1,0,1>, three two-qudit gates",
         dev < 1e-10 && c.count_arity(2) == 3,
         fmt("max deviation %.1e, two-qudit gates %zu", dev, c.count_arity(2)));
}

void scaling() {
  bool ok = true;
  std::string detail;
  for (unsigned n = 2; n <= 6; ++n) {
    const auto r = verify_decomposition(build_n_ts_circuit(n),
                                        oracle_n_toffoli_sign(n, ts_flipped_component(n)), n);
    ok = ok && std::abs(r.fidelity_to_oracle - 1.0) < 1e-10 && r.two_qudit_gate_count == 2 * n - 1;
    if (n == 5) ok = ok && r.two_qudit_gate_count == 9;
    detail += fmt("n=%u:%zu ", n, r.two_qudit_gate_count);
  }
  report(2, "n-control T-S has fidelity 1 and 2n-1 two-qudit gates for n = 2..6", ok,
         detail + "(qubit-only n=5 reference 64)");
}

void closure() {
  double worst = 0.0;
  std::size_t inputs = 0;
  for (unsigned n = 2; n <= 6; ++n) {
    const Circuit c = build_n_ts_circuit(n);
    const Matrix u = circuit_unitary(c);
    for (std::size_t col : qubit_subspace_indices(c.dims())) {
      double outside = 0.0;
      for (std::size_t k = 0; k < c.dims().total_dim(); ++k) {
        if (basis_digits(k, c.dims())[n] >= 2)
          outside += std::norm(u(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(col)));
      }
      worst = std::max(worst, std::sqrt(outside));
      ++inputs;
    }
  }
  report(3, "qubit basis inputs leave no amplitude on target levels >= 2", worst < 1e-12,
         fmt("%zu inputs, max leakage %.1e", inputs, worst));
}

void kerr() {
  const GateRealization g = kerr_cs_gate(3.141592653589793);
  const double dev = max_abs(g.logical_transfer - sign_diag(4, 3));
  auto b = std::make_shared<const FockBasis>(4, 1);
  double vac = 0.0;
  for (const Occupation& o : {Occupation{1, 0, 0, 0}, Occupation{0, 1, 0, 0}}) {
    const OpticalState in = OpticalState::fock(b, o);
    vac = std::max(vac, max_abs(evolve(g.circuit, in).amplitudes() - in.amplitudes()));
  }
  report(4, "cross-Kerr at chi = pi is diag(1,1,1,-1); identity with the target in vacuum",
         dev < 1e-15 && vac == 0.0, fmt("deviation %.1e, vacuum deviation %.1e", dev, vac));
}

void deterministic() {
  const GateRealization g = deterministic_ts_gate();
  const Matrix qutrit = restrict_to_qubits(circuit_unitary(build_ts_circuit()), WireDims{2, 2, 3});
  const PhaseMatch m = equiv_up_to_global_phase(g.logical_transfer, qutrit, 1e-10);
  report(5, "deterministic optical T-S uses 3 Kerr interactions and equals the qutrit circuit",
         g.kerr_interactions() == 3 && m.equivalent,
         fmt("Kerr %zu, residual %.1e", g.kerr_interactions(), m.residual));
}

void heralded() {
  std::mt19937_64 rng(606);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const HeraldedTrace t = heralded_ts_trace(PureState(WireDims{2, 2, 2}, testing::random_state(8, rng)));
    worst = std::max(worst, std::abs(t.filtered.probability - 0.5));
  }
  const GateRealization g = heralded_ts_gate(Rational(1, 4));
  const bool exact = g.exact_success == Rational(1, 32) && g.success_spread < 1e-12;
  const bool flip = g.flipped_components == std::vector<std::size_t>{0b001};
  report(6, "heralded T-S filter succeeds with 1/2, total 1/32, flip on |H,H,V>",
         worst < 1e-12 && exact && flip,
         fmt("filter |p-1/2| <= %.1e over 100 inputs, total %s", worst,
             g.exact_success ? g.exact_success->to_string().c_str() : "not rational"));
}

void postselected_cs() {
  const GateRealization g = postselected_cs_gate();
  double worst = 0.0;
  for (double p : g.success_by_input) worst = std::max(worst, std::abs(p - 1.0 / 9));
  const double shape = max_abs(g.logical_transfer * 3.0 - sign_diag(4, 3));
  const GateRealization chain = naive_postselected_ts_gate();
  const bool chain_ok = chain.exact_success == Rational(1, 162) && chain.success_spread < 1e-12;
  report(7, "post-selected C-S at 1/9 with transfer (1/3)diag(1,1,1,-1); chained total 1/162",
         worst < 1e-10 && shape < 1e-12 && chain_ok,
         fmt("|p-1/9| <= %.1e, shape %.1e, chain %s", worst, shape,
             chain.exact_success ? chain.exact_success->to_string().c_str() : "not rational"));
}

void committed_solution() {
  const std::string path = std::string(QTS_DATA_DIR) + "/postselected_ts_params.json";
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  bool solver_ok = false;
  double solver_p = 0.0;
  try {
    const auto j = nlohmann::json::parse(ss.str());
    solver_ok = j.at("solver").at("converged").get<bool>();
    solver_p = j.at("solver").at("probability").get<double>();
  } catch (const std::exception&) {
  }
  const PtsParameters p = pts_parameters_from_json(ss.str());
  const Matrix t = pts_coincidence_transfer(p);
  const PtsFit f = pts_fit(t);
  int negatives = 0;
  for (Eigen::Index k = 0; k < 8; ++k) negatives += t(k, k).real() < 0;
  const bool sign = negatives == 1 && t(0, 0).real() < 0;
  const GateRealization g = pts_gate(p);
  const double routes = max_abs(g.logical_transfer - t);
  const bool ok = solver_ok && std::abs(solver_p - 1.0 / 72) < 1e-6 &&
                  std::abs(f.probability - 1.0 / 72) < 1e-9 && f.magnitude_spread < 1e-9 &&
                  f.off_diagonal < 1e-9 && sign && routes < 1e-9;
  report(8, "solved post-selected T-S reaches 1/72 with equal magnitudes and one sign at |000>",
         ok,
         fmt("|lambda|^2 - 1/72 = %.1e, spread %.1e, negatives %d, routes %.1e",
             f.probability - 1.0 / 72, f.magnitude_spread, negatives, routes));
}

void oracle_equivalence() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> modes(2, 7), photons(1, 3);
  double entry = 0.0, unitarity = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = static_cast<std::size_t>(modes(rng));
    const auto n = static_cast<unsigned>(photons(rng));
    const Matrix u = testing::random_unitary(static_cast<Eigen::Index>(m), rng);
    const FockBasis b(m, n);
    const Matrix l = lift_to_fock(u, b);
    unitarity = std::max(unitarity, unitarity_residual(l));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        entry = std::max(entry, std::abs(l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                                         permanent_amplitude(u, b.state(j), b.state(i))));
  }
  report(9, "Fock lift equals permanents on 50 random interferometers and is unitary",
         entry < 1e-9 && unitarity < 1e-9,
         fmt("max entry difference %.1e, unitarity residual %.1e", entry, unitarity));
}

void completeness() {
  const std::vector<GateRealization> gates{postselected_cs_gate(), heralded_ts_gate(),
                                           naive_postselected_ts_gate(),
                                           pts_gate(load_pts_parameters(std::string(QTS_DATA_DIR) +
                                                                        "/postselected_ts_params.json"))};
  double worst = 0.0;
  for (const auto& g : gates) {
    const WireDims d = g.input_layout.logical_dims();
    auto b = std::make_shared<const FockBasis>(g.circuit.modes(), static_cast<unsigned>(d.num_wires()));
    for (std::size_t i = 0; i < d.total_dim(); ++i) {
      const OpticalState out = evolve(g.circuit, encode_dual_rail(basis_digits(i, d), g.input_layout, b));
      double total = 0.0;
      for (const auto& occ : b->states()) {
        DetectionPattern p(g.circuit.modes());
        for (std::size_t m = 0; m < occ.size(); ++m) p.require(m, occ[m]);
        total += postselect(out, p).probability;
      }
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  report(10, "detection outcomes of every post-selected construction sum to 1", worst < 1e-9,
         fmt("4 constructions, max |sum - 1| %.1e", worst));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> checks{qutrit_ts, scaling, closure, kerr, deterministic,
                                                  heralded, postselected_cs, committed_solution,
                                                  oracle_equivalence, completeness};
  for (std::size_t i = 0; i < checks.size(); ++i) {
    try {
      checks[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "threw", false, e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
