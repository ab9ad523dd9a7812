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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qts/optical_gates.hpp"

namespace qts {

// Three-photon post-selected T-S. Principal modes:
//   0 C1 top, 1 C1 bottom, 2 T top (upper arm, output), 3 extra target mode
//   (lower arm, discarded), 4 T bottom, 5 C2 top, 6 C2 bottom,
// plus one vacuum ancilla per attenuator (modes 7..11).
//
// The top target mode is split into two arms. The first interferometer
// couples its upper arm to C1 bottom through a 1/3 splitter; the second
// couples its lower arm to C2 top. Wire order is (C1, C2, T).

inline constexpr std::size_t kPtsModes = 12;

struct SplitterSetting {
  std::string name;
  double reflectivity = 0.5;
  DottedSide dotted = DottedSide::kSecond;
  /// Fixed settings are not touched by the solver.
  bool fixed = false;
  /// Element kind: beamsplitter between principal modes or attenuator.
  bool attenuator = false;
};

struct PtsParameters {
  /// In circuit order: split, coupler1, c1_top, lower_arm, middle, coupler2,
  /// c2_bottom, upper_arm, combine, t_bottom.
  std::vector<SplitterSetting> splitters;

  /// Couplers at 1/3, everything else at 1/2 with the default orientations.
  static PtsParameters initial();

  SplitterSetting& at(const std::string& name);
  const SplitterSetting& at(const std::string& name) const;
  /// Throws std::invalid_argument on missing, unknown or out-of-range entries.
  void validate() const;
};

OpticalCircuit pts_circuit(const PtsParameters& params);
/// {{0, 1}, {5, 6}, {2, 4}}
ModeLayout pts_layout();
/// One photon per logical wire, nothing in mode 3 or the ancillas.
DetectionPattern pts_coincidence();

/// 8x8 coincidence amplitudes from permanents of the single-photon transfer.
Matrix pts_coincidence_transfer(const PtsParameters& params);
/// Same gate through the Fock-space engine.
GateRealization pts_gate(const PtsParameters& params);

/// Deviation of a coincidence transfer from lambda * diag(-1, 1, ..., 1).
struct PtsFit {
  /// Mean of s_k T(k, k) with s = (-1, 1, ..., 1).
  double lambda = 0.0;
  double probability = 0.0;
  /// max_k |s_k T(k, k) - lambda|
  double magnitude_spread = 0.0;
  double off_diagonal = 0.0;
  double max_imag = 0.0;
};
PtsFit pts_fit(const Matrix& coincidence_transfer);

struct PtsSolveOptions {
  std::uint64_t seed = 1;
  unsigned starts = 24;
  double target_probability = 1.0 / 72.0;
  double probability_tol = 1e-6;
  double constraint_tol = 1e-10;
  /// Try the other dotted-side orientations of the five principal splitters
  /// when the defaults miss the target.
  bool enumerate_orientations = true;
};

struct PtsSolveResult {
  PtsParameters params;
  PtsFit fit;
  bool converged = false;
  std::uint64_t seed = 0;
  unsigned orientations_tried = 0;
  std::string message;
};

PtsSolveResult solve_pts_reflectivities(const PtsSolveOptions& options = {});

std::string pts_parameters_to_json(const PtsParameters& params, const PtsSolveResult* provenance = nullptr);
PtsParameters pts_parameters_from_json(const std::string& text);
PtsParameters load_pts_parameters(const std::filesystem::path& path);
void save_pts_parameters(const std::filesystem::path& path, const PtsParameters& params,
                         const PtsSolveResult* provenance = nullptr);

}  // namespace qts
