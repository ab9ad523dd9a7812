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

#include "qts/encoding.hpp"
#include "qts/optical_circuit.hpp"
#include "qts/rational.hpp"

namespace qts {

/**
 * An optical circuit together with how it is read as a logical gate.
 *
 * `logical_transfer(out, in)` holds the post-selected logical amplitudes the
 * simulation produces. Components that are modeled rather than simulated
 * (heralded C-S gates treated as ideal) contribute `charged_probability`, so
 * the end-to-end success for input `in` is
 * ||column in||^2 * charged_probability.
 */
struct GateRealization {
  std::string name;
  OpticalCircuit circuit;
  ModeLayout input_layout;
  ModeLayout output_layout;
  DetectionPattern herald;
  Rational charged_probability{1};
  std::string resources;

  Matrix logical_transfer;
  std::vector<double> success_by_input;
  /// Mean of success_by_input.
  double success_probability = 0.0;
  /// success_probability as a small fraction when it is one within 1e-10.
  std::optional<Rational> exact_success;
  /// Logical basis components whose diagonal sign differs from the majority.
  std::vector<std::size_t> flipped_components;
  /// Largest off-diagonal |logical_transfer| entry.
  double off_diagonal = 0.0;
  /// max - min of success_by_input.
  double success_spread = 0.0;

  std::size_t kerr_interactions() const { return circuit.count(ElementKind::kCrossKerr); }
};

/**
 * Evolves every logical basis state of `input_layout` through `circuit`,
 * post-selects on `herald` and decodes on `output_layout`.
 */
GateRealization characterize(std::string name, OpticalCircuit circuit, ModeLayout input_layout,
                             ModeLayout output_layout, DetectionPattern herald,
                             Rational charged_probability = Rational(1),
                             std::string resources = {});

/// Two polarization qubits (modes aH, aV, bH, bV) with a Kerr medium on the
/// two V modes.
GateRealization kerr_cs_gate(double chi = 3.141592653589793);

/**
 * Deterministic T-S on three polarization qubits. The target enters on path
 * t (modes 4, 5); a PBS sends its V component to an auxiliary path s
 * (modes 6, 7), which plays the role of X_A. CNOT, C-S, CNOT act on path s
 * through three cross-Kerr interactions and half-wave plates; a second PBS
 * recombines. Flips |1,0,1>.
 */
GateRealization deterministic_ts_gate();

/**
 * Heralded T-S. Same front end as the deterministic gate, but the two C-S
 * interactions stand for heralded gates of success `cs_success` each, and
 * the final CNOT is replaced by half-wave plates on both target paths, a
 * PBS and a zero detection on path s. Flips |0,0,1>.
 */
GateRealization heralded_ts_gate(Rational cs_success = Rational(1, 4));

/// Intermediate states of the heralded gate for one logical input.
struct HeraldedTrace {
  /// After both C-S interactions.
  OpticalState after_cs;
  /// After the half-wave plates on both target paths.
  OpticalState after_plates;
  /// After the recombining PBS and the zero detection on path s.
  PostSelection filtered;
};
HeraldedTrace heralded_ts_trace(const PureState& logical_input);

/// Layout reading the heralded gate's target as a ququit over (sH, sV, tH, tV).
ModeLayout heralded_ququit_layout();

/**
 * Post-selected C-S on two dual-rail qubits: a reflectivity-1/3 splitter
 * between the two "1" modes, 1/3 attenuators on the "0" modes and a
 * zero-angle wave plate on the target. Coincidence probability 1/9.
 */
GateRealization postselected_cs_gate();

/**
 * The heralded T-S layout with both C-S interactions replaced by the
 * post-selected C-S network (the parked target path is attenuated to keep
 * branches balanced). Coincidence probability 1/162.
 */
GateRealization naive_postselected_ts_gate();

}  // namespace qts
