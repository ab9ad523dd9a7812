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

#include "qts/gate_matrix.hpp"
#include "qts/pure_state.hpp"
#include "qts/wire_dims.hpp"

namespace qts {

struct CircuitStep {
  std::string name;
  std::vector<double> params;
  std::vector<std::size_t> wires;
  GateMatrix gate;
};

/// Ordered gate sequence over a fixed register.
class Circuit {
 public:
  explicit Circuit(WireDims dims) : dims_(std::move(dims)) {}

  /// Appends a step; throws if the wires are invalid for this register or
  /// do not match the gate's declared dimensions.
  Circuit& add(std::string name, std::vector<double> params,
               std::vector<std::size_t> wires, GateMatrix gate);

  const WireDims& dims() const { return dims_; }
  const std::vector<CircuitStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  /// Number of steps acting on exactly `arity` wires.
  std::size_t count_arity(std::size_t arity) const;

  /// Copy without step `index`.
  Circuit without_step(std::size_t index) const;

  bool operator==(const Circuit& other) const;

 private:
  WireDims dims_;
  std::vector<CircuitStep> steps_;
};

/// Ordered product of the embedded step unitaries (last step leftmost).
Matrix circuit_unitary(const Circuit& circ);

/// Runs every step on `state`.
PureState run(const Circuit& circ, const PureState& state);

}  // namespace qts
