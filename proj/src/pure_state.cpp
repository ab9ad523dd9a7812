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

#include "qts/pure_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qts {

PureState::PureState(WireDims dims)
    : dims_(std::move(dims)),
      amps_(Vector::Zero(static_cast<Eigen::Index>(dims_.total_dim()))) {
  amps_(0) = 1.0;
}

PureState::PureState(WireDims dims, Vector amps)
    : dims_(std::move(dims)), amps_(std::move(amps)) {
  if (amps_.size() != static_cast<Eigen::Index>(dims_.total_dim())) {
    throw std::invalid_argument("PureState: " + std::to_string(amps_.size()) +
                                " amplitudes for register " + dims_.to_string());
  }
  if (std::abs(amps_.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("PureState: amplitudes are not normalized");
  }
}

PureState PureState::basis(WireDims dims, std::span<const unsigned> digits) {
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dims.total_dim()));
  amps(static_cast<Eigen::Index>(basis_index(digits, dims))) = 1.0;
  return PureState(std::move(dims), std::move(amps));
}

Complex PureState::amplitude(std::span<const unsigned> digits) const {
  return amps_(static_cast<Eigen::Index>(basis_index(digits, dims_)));
}

PureState apply_gate(const PureState& state, const GateMatrix& gate,
                     std::span<const std::size_t> wires) {
  Matrix column = state.amplitudes();
  apply_to_columns(column, gate, wires, state.dims());
  return PureState(state.dims(), column.col(0));
}

}  // namespace qts
