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

#include <span>
#include <string>
#include <vector>

#include "qts/fock_basis.hpp"
#include "qts/pure_state.hpp"

namespace qts {

/**
 * Assigns each logical wire a group of global modes. A wire whose group has
 * k modes is a k-level system: level l is one photon in the group's l-th
 * mode and none elsewhere in the group (dual rail for k = 2; |100>, |010>,
 * |001> for a qutrit).
 */
class ModeLayout {
 public:
  ModeLayout(std::size_t modes, std::vector<std::vector<std::size_t>> groups);

  std::size_t modes() const { return modes_; }
  std::size_t num_wires() const { return groups_.size(); }
  const std::vector<std::size_t>& group(std::size_t wire) const { return groups_.at(wire); }
  const std::vector<std::vector<std::size_t>>& groups() const { return groups_; }
  WireDims logical_dims() const;

  /// Occupation of the logical basis state `digits`.
  Occupation occupation(std::span<const unsigned> digits) const;

 private:
  std::size_t modes_;
  std::vector<std::vector<std::size_t>> groups_;
};

/// One photon per wire, placed per `digits`.
OpticalState encode_dual_rail(std::span<const unsigned> digits, const ModeLayout& layout,
                              const FockBasisPtr& basis);
/// Linear extension of encode_dual_rail to a superposition.
OpticalState encode_state(const PureState& logical, const ModeLayout& layout,
                          const FockBasisPtr& basis);

struct Decoded {
  WireDims dims;
  /// Logical amplitudes, not renormalized.
  Vector amplitudes;
  /// Norm of the part outside the one-photon-per-group subspace.
  double leaked_norm = 0.0;

  PureState normalized() const;
};

/// Reads off logical amplitudes; everything else is reported as leakage.
Decoded decode_dual_rail(const OpticalState& state, const ModeLayout& layout);

}  // namespace qts
