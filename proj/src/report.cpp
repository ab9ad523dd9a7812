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

#include "qts/report.hpp"

#include <cmath>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <sstream>

namespace qts {

namespace {

using Json = nlohmann::ordered_json;

std::string ket3(std::size_t k, std::size_t wires) {
  std::string s = "|";
  for (std::size_t w = 0; w < wires; ++w) {
    if (w) s += ",";
    s += ((k >> (wires - 1 - w)) & 1u) ? "1" : "0";
  }
  return s + ">";
}

std::string flipped_label(const std::vector<std::size_t>& comps, std::size_t wires) {
  std::string s;
  for (auto c : comps) s += (s.empty() ? "" : " ") + ket3(c, wires);
  return s.empty() ? "-" : s;
}

ProbabilityRow simulated(const GateRealization& g, std::string construction,
                         std::optional<Rational> cited_exact, double reference) {
  ProbabilityRow r;
  r.construction = std::move(construction);
  r.resources = g.resources;
  r.probability = g.success_probability;
  r.source = "simulated";
  r.reference = reference;
  if (cited_exact) {
    r.exact = g.exact_success;
    r.matches = g.exact_success && *g.exact_success == *cited_exact && g.success_spread < 1e-9;
  } else {
    r.matches = std::abs(g.success_probability - reference) < 1e-6 && g.success_spread < 1e-9;
  }
  r.flipped = flipped_label(g.flipped_components, g.input_layout.num_wires());
  return r;
}

ProbabilityRow cited(std::string construction, std::string resources, double value,
                     std::optional<Rational> exact, bool matches = true) {
  return {std::move(construction), std::move(resources), value, exact, "cited", value, matches,
          "-"};
}

}  // namespace

bool ComparisonReport::all_match() const {
  for (const auto& r : probabilities) {
    if (!r.matches) return false;
  }
  for (const auto& r : gate_counts) {
    if (!r.matches) return false;
  }
  return true;
}

ComparisonReport success_probability_report(const PtsParameters& postselected_ts) {
  ComparisonReport rep;
  const Rational quarter(1, 4);

  // Six heralded C-S gates at 1/4 each; the arithmetic is checked here too.
  rep.probabilities.push_back(
      cited("qubit-only T-S from heralded C-S gates", "6 entangled pairs", 1.0 / 4096,
            Rational(1, 4096), quarter.pow(6) == Rational(1, 4096)));
  rep.probabilities.push_back(
      cited("optimized qubit-only heralded Toffoli", "3 entangled pairs", 1.0 / 1065,
            Rational(1, 1065)));
  rep.probabilities.push_back(
      cited("optimized qubit-only post-selected Toffoli", "3 photons", 1.0 / 133, std::nullopt));

  rep.probabilities.push_back(simulated(heralded_ts_gate(quarter), "heralded qudit T-S",
                                        Rational(1, 32), 1.0 / 32));
  rep.probabilities.push_back(simulated(naive_postselected_ts_gate(),
                                        "chained post-selected C-S T-S", Rational(1, 162),
                                        1.0 / 162));
  rep.probabilities.push_back(simulated(pts_gate(postselected_ts), "post-selected qudit T-S",
                                        std::nullopt, 1.0 / 72));
  rep.probabilities.push_back(
      simulated(postselected_cs_gate(), "post-selected C-S", Rational(1, 9), 1.0 / 9));
  rep.probabilities.push_back(simulated(deterministic_ts_gate(), "cross-Kerr T-S", Rational(1),
                                        1.0));

  auto count_row = [](std::string name, std::size_t v, std::string src, std::size_t ref) {
    return GateCountRow{std::move(name), v, std::move(src), ref, v == ref};
  };
  rep.gate_counts.push_back(count_row("qubit-only T-S, C-S gates", 6, "cited", 6));
  rep.gate_counts.push_back(count_row("qubit-only Toffoli, two-qubit gates", 5, "cited", 5));
  rep.gate_counts.push_back(count_row("qutrit T-S, two-qudit gates",
                                      build_ts_circuit().count_arity(2), "simulated", 3));
  rep.gate_counts.push_back(
      count_row("qubit-only 5-control Toffoli, two-qubit gates", 64, "cited", 64));
  rep.gate_counts.push_back(count_row("qudit 5-control T-S, two-qudit gates",
                                      build_n_ts_circuit(5).count_arity(2), "simulated", 9));
  return rep;
}

std::string format_probability(double p, const std::optional<Rational>& exact) {
  if (exact) return exact->to_string();
  std::ostringstream os;
  os << std::setprecision(10) << p;
  if (p > 0) os << " (~1/" << std::setprecision(6) << 1.0 / p << ")";
  return os.str();
}

std::string format_report(const ComparisonReport& r, ReportFormat f) {
  if (f == ReportFormat::kJson) {
    Json j;
    auto& rows = j["success_probabilities"] = Json::array();
    for (const auto& p : r.probabilities) {
      Json row{{"construction", p.construction},
               {"resources", p.resources},
               {"probability", p.probability}};
      if (p.exact) row["exact"] = p.exact->to_string();
      row["source"] = p.source;
      row["reference"] = p.reference;
      row["flipped"] = p.flipped;
      row["matches"] = p.matches;
      rows.push_back(row);
    }
    auto& counts = j["gate_counts"] = Json::array();
    for (const auto& c : r.gate_counts) {
      counts.push_back({{"construction", c.construction},
                        {"two_qudit_gates", c.two_qudit_gates},
                        {"source", c.source},
                        {"reference", c.reference},
                        {"matches", c.matches}});
    }
    j["all_match"] = r.all_match();
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << std::left << std::setw(44) << "construction" << std::setw(22) << "resources"
     << std::setw(26) << "success" << std::setw(11) << "source" << std::setw(10) << "flip"
     << "ok\n";
  for (const auto& p : r.probabilities) {
    os << std::setw(44) << p.construction << std::setw(22) << p.resources << std::setw(26)
       << format_probability(p.probability, p.exact) << std::setw(11) << p.source
       << std::setw(10) << p.flipped << (p.matches ? "yes" : "NO") << "\n";
  }
  os << "\n" << std::setw(52) << "gate count" << std::setw(8) << "value" << std::setw(11)
     << "source" << "ok\n";
  for (const auto& c : r.gate_counts) {
    os << std::setw(52) << c.construction << std::setw(8) << c.two_qudit_gates << std::setw(11)
       << c.source << (c.matches ? "yes" : "NO") << "\n";
  }
  return os.str();
}

std::string format_decomposition(const DecompositionReport& r, double tol, ReportFormat f) {
  const std::size_t wires = r.n + 1;
  if (f == ReportFormat::kJson) {
    Json j{{"n", r.n},
           {"dims", r.dims},
           {"two_qudit_gates", r.two_qudit_gate_count},
           {"expected_two_qudit_gates", r.expected_two_qudit_gate_count},
           {"single_qudit_gates", r.single_qudit_gate_count},
           {"max_level_used", r.max_level_used},
           {"fidelity", r.fidelity_to_oracle},
           {"max_deviation", r.max_deviation},
           {"leakage", r.leakage},
           {"flipped", flipped_label(r.flipped_components, wires)}};
    j["local_flip_mask"] = r.local_flip_mask ? Json(*r.local_flip_mask) : Json(nullptr);
    j["reference_counts"] = r.reference_counts;
    j["tolerance"] = tol;
    j["passed"] = r.passed(tol);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << std::setprecision(3);
  os << "n = " << r.n << " controls, dims " << r.dims << "\n"
     << "  two-qudit gates   " << r.two_qudit_gate_count << " (expected "
     << r.expected_two_qudit_gate_count << ")\n"
     << "  single-qudit      " << r.single_qudit_gate_count << "\n"
     << "  max level used    " << r.max_level_used << "\n"
     << "  fidelity          " << std::setprecision(15) << r.fidelity_to_oracle << "\n"
     << std::setprecision(3) << "  max deviation     " << r.max_deviation << "\n"
     << "  leakage           " << r.leakage << "\n"
     << "  flipped           " << flipped_label(r.flipped_components, wires) << "\n";
  for (const auto& [k, v] : r.reference_counts) os << "  ref " << k << " = " << v << "\n";
  os << (r.passed(tol) ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string format_realization(const GateRealization& g, ReportFormat f) {
  const std::size_t wires = g.input_layout.num_wires();
  if (f == ReportFormat::kJson) {
    Json j{{"construction", g.name},
           {"resources", g.resources},
           {"kerr_interactions", g.kerr_interactions()},
           {"success_probability", g.success_probability}};
    if (g.exact_success) j["exact"] = g.exact_success->to_string();
    j["charged_probability"] = g.charged_probability.to_string();
    j["success_spread"] = g.success_spread;
    j["flipped"] = flipped_label(g.flipped_components, wires);
    j["off_diagonal"] = g.off_diagonal;
    auto& diag = j["diagonal"] = Json::array();
    for (Eigen::Index k = 0; k < g.logical_transfer.rows() && k < g.logical_transfer.cols(); ++k) {
      diag.push_back(g.logical_transfer(k, k).real());
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << g.name << " (" << g.resources << ")\n"
     << "  success probability " << format_probability(g.success_probability, g.exact_success)
     << "\n"
     << std::setprecision(3) << "  spread over inputs  " << g.success_spread << "\n"
     << "  flipped component   " << flipped_label(g.flipped_components, wires) << "\n"
     << "  off-diagonal        " << g.off_diagonal << "\n"
     << "  Kerr interactions   " << g.kerr_interactions() << "\n"
     << "  diagonal           ";
  os << std::setprecision(6);
  for (Eigen::Index k = 0; k < g.logical_transfer.rows() && k < g.logical_transfer.cols(); ++k) {
    os << " " << g.logical_transfer(k, k).real();
  }
  os << "\n";
  return os.str();
}

}  // namespace qts
