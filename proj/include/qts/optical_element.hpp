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

#include <string>
#include <vector>

#include "qts/types.hpp"

namespace qts {

enum class ElementKind {
  kBeamSplitter,
  kPolarizingBeamSplitter,
  kHalfWavePlate,
  kCrossKerr,
  kAttenuator,
};

/// Which port of an asymmetric beamsplitter picks up the sign on reflection.
enum class DottedSide { kFirst, kSecond };

/**
 * One optical component acting on a few global modes.
 *
 * Beamsplitters use the real block
 *
 *   [ sqrt(r)      sqrt(1 - r) ]
 *   [ sqrt(1 - r)  -sqrt(r)    ]
 *
 * on (first, second) with r the reflectivity: the probability that a photon
 * stays on its own line. The minus sign sits on the dotted port; with
 * DottedSide::kFirst the two diagonal entries trade signs.
 *
 * Attenuators are beamsplitters against a dedicated vacuum ancilla mode.
 * `value` is the kept intensity fraction, and the data mode is on the
 * non-dotted side unless `dotted` says otherwise.
 *
 * The PBS transmits H and swaps V between two paths with no phase. Its modes
 * are (h1, v1, h2, v2). The half-wave plate at angle theta maps (h, v) by
 * [[cos 2t, sin 2t], [sin 2t, -cos 2t]]. The cross-Kerr phase is
 * exp(i chi n_a n_b).
 */
struct OpticalElement {
  ElementKind kind;
  double value = 0.0;
  std::vector<std::size_t> modes;
  DottedSide dotted = DottedSide::kSecond;
  std::string label;

  bool is_linear() const { return kind != ElementKind::kCrossKerr; }

  /// Mode-transfer block over `modes` (linear elements only).
  RealMatrix block() const;
};

OpticalElement beam_splitter(double reflectivity, std::size_t a, std::size_t b,
                             DottedSide dotted = DottedSide::kSecond,
                             std::string label = {});
OpticalElement polarizing_beam_splitter(std::size_t h1, std::size_t v1, std::size_t h2,
                                        std::size_t v2, std::string label = {});
OpticalElement half_wave_plate(double theta_rad, std::size_t h, std::size_t v,
                               std::string label = {});
OpticalElement cross_kerr(double chi, std::size_t a, std::size_t b, std::string label = {});
OpticalElement attenuator(double transmission, std::size_t mode, std::size_t ancilla,
                          DottedSide dotted = DottedSide::kSecond, std::string label = {});

std::string kind_name(ElementKind kind);

/// 22.5 degrees in radians; a half-wave plate there acts as a Hadamard.
inline constexpr double kHadamardPlateAngle = 0.39269908169872414;

}  // namespace qts
