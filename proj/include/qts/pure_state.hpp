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

#include "qts/gate_matrix.hpp"
#include "qts/types.hpp"
#include "qts/wire_dims.hpp"

namespace qts {

/// Normalized amplitude vector over a mixed-radix register.
class PureState {
 public:
  /// |0,...,0>.
  explicit PureState(WireDims dims);
  /// Takes ownership of `amps`; throws unless the length matches and the
  /// norm is 1 within 1e-10.
  PureState(WireDims dims, Vector amps);

  static PureState basis(WireDims dims, std::span<const unsigned> digits);

  const WireDims& dims() const { return dims_; }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(std::span<const unsigned> digits) const;
  double norm() const { return amps_.norm(); }

 private:
  WireDims dims_;
  Vector amps_;
};

/// Applies `gate` to `wires`, identity elsewhere.
PureState apply_gate(const PureState& state, const GateMatrix& gate,
                     std::span<const std::size_t> wires);

}  // namespace qts
