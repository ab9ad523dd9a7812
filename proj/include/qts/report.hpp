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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qts/optical_gates.hpp"
#include "qts/postselected_ts.hpp"
#include "qts/rational.hpp"
#include "qts/toffoli.hpp"

namespace qts {

enum class ReportFormat { kHuman, kJson };

struct ProbabilityRow {
  std::string construction;
  std::string resources;
  double probability = 0.0;
  /// Set for constructions whose probability is rational.
  std::optional<Rational> exact;
  /// "simulated" or "cited"
  std::string source;
  /// Published value the row is compared against.
  double reference = 0.0;
  bool matches = false;
  std::string flipped;
};

struct GateCountRow {
  std::string construction;
  std::size_t two_qudit_gates = 0;
  std::string source;
  std::size_t reference = 0;
  bool matches = false;
};

struct ComparisonReport {
  std::vector<ProbabilityRow> probabilities;
  std::vector<GateCountRow> gate_counts;
  bool all_match() const;
};

/// Builds every construction, simulates the optical ones and tabulates them
/// next to the cited comparison constants.
ComparisonReport success_probability_report(const PtsParameters& postselected_ts);

std::string format_report(const ComparisonReport& r, ReportFormat f);
std::string format_decomposition(const DecompositionReport& r, double tol, ReportFormat f);
std::string format_realization(const GateRealization& g, ReportFormat f);

/// "1/32" for exact values, otherwise a decimal with its closest 1/k.
std::string format_probability(double p, const std::optional<Rational>& exact);

}  // namespace qts
