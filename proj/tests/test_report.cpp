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

#include <catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "qts/report.hpp"

using namespace qts;

namespace {

const std::string kParams = std::string(QTS_DATA_DIR) + "/postselected_ts_params.json";

const ProbabilityRow& row(const ComparisonReport& r, const std::string& name) {
  for (const auto& p : r.probabilities) {
    if (p.construction == name) return p;
  }
  throw std::runtime_error("no row " + name);
}

}  // namespace

TEST_CASE("rationals reduce and multiply") {
  CHECK(Rational(2, 8) == Rational(1, 4));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 4).pow(6) == Rational(1, 4096));
  CHECK((Rational(1, 16) * Rational(1, 2)).to_string() == "1/32");
  CHECK(Rational(5).to_string() == "5");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("continued-fraction snapping") {
  CHECK(Rational::approximate(1.0 / 162) == Rational(1, 162));
  CHECK(Rational::approximate(0.0313 + 1e-12) == Rational(313, 10000));
  CHECK(Rational::approximate(1.0 / 9 + 1e-12) == Rational(1, 9));
  CHECK_FALSE(Rational::approximate(3.14159265358979, 1000, 1e-12).has_value());
  CHECK(Rational::approximate(1.0) == Rational(1));
}

TEST_CASE("comparison table") {
  const ComparisonReport r = success_probability_report(load_pts_parameters(kParams));
  CHECK(r.all_match());
  CHECK(r.probabilities.size() >= 7);

  const auto& naive = row(r, "qubit-only T-S from heralded C-S gates");
  CHECK(naive.source == "cited");
  CHECK(naive.exact == Rational(1, 4096));
  CHECK(naive.resources == "6 entangled pairs");
  CHECK(row(r, "optimized qubit-only heralded Toffoli").exact == Rational(1, 1065));
  CHECK(row(r, "optimized qubit-only post-selected Toffoli").reference == Catch::Approx(1.0 / 133));

  const auto& her = row(r, "heralded qudit T-S");
  CHECK(her.source == "simulated");
  CHECK(her.exact == Rational(1, 32));
  CHECK(her.resources == "2 entangled pairs");
  CHECK(her.flipped == "|0,0,1>");
  CHECK(row(r, "chained post-selected C-S T-S").exact == Rational(1, 162));
  const auto& pts = row(r, "post-selected qudit T-S");
  CHECK(pts.resources == "3 photons");
  CHECK_FALSE(pts.exact.has_value());
  CHECK(std::abs(pts.probability - 1.0 / 72) < 1e-6);
  CHECK(pts.flipped == "|0,0,0>");
  CHECK(row(r, "post-selected C-S").exact == Rational(1, 9));

  std::vector<std::size_t> counts;
  for (const auto& c : r.gate_counts) counts.push_back(c.two_qudit_gates);
  CHECK(counts == std::vector<std::size_t>{6, 5, 3, 64, 9});
}

TEST_CASE("report formats") {
  const ComparisonReport r = success_probability_report(load_pts_parameters(kParams));
  const std::string human = format_report(r, ReportFormat::kHuman);
  CHECK(human.find("1/32") != std::string::npos);
  CHECK(human.find("1/162") != std::string::npos);
  CHECK(human.find("1/4096") != std::string::npos);
  CHECK(human.find("~1/72") != std::string::npos);

  const auto j = nlohmann::json::parse(format_report(r, ReportFormat::kJson));
  CHECK(j["all_match"] == true);
  CHECK(j["success_probabilities"].size() == r.probabilities.size());
  CHECK(j["success_probabilities"][3]["exact"] == "1/32");
  CHECK(j["gate_counts"][4]["two_qudit_gates"] == 9);

  const auto d = nlohmann::json::parse(format_decomposition(
      verify_decomposition(build_ts_circuit(), oracle_n_toffoli_sign(2, 5), 2), 1e-10,
      ReportFormat::kJson));
  CHECK(d["passed"] == true);
  CHECK(d["two_qudit_gates"] == 3);
  CHECK(d["flipped"] == "|1,0,1>");

  const auto g = nlohmann::json::parse(format_realization(heralded_ts_gate(), ReportFormat::kJson));
  CHECK(g["exact"] == "1/32");
  CHECK(g["flipped"] == "|0,0,1>");
  CHECK(format_probability(0.125, std::nullopt).find("~1/8") != std::string::npos);
}
