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

#include "qts/circuit.hpp"

#include <set>
#include <stdexcept>

namespace qts {

Circuit& Circuit::add(std::string name, std::vector<double> params,
                      std::vector<std::size_t> wires, GateMatrix gate) {
  if (wires.size() != gate.arity()) {
    throw std::invalid_argument(name + ": " + std::to_string(wires.size()) +
                                " wires given, gate has arity " +
                                std::to_string(gate.arity()));
  }
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    if (wires[k] >= dims_.num_wires()) {
      throw std::out_of_range(name + ": wire " + std::to_string(wires[k]) +
                              " outside register " + dims_.to_string());
    }
    if (!seen.insert(wires[k]).second) {
      throw std::invalid_argument(name + ": repeated wire " +
                                  std::to_string(wires[k]));
    }
    if (dims_[wires[k]] != gate.wire_dims()[k]) {
      throw std::invalid_argument(
          name + ": wire " + std::to_string(wires[k]) + " has dimension " +
          std::to_string(dims_[wires[k]]) + ", gate expects " +
          std::to_string(gate.wire_dims()[k]));
    }
  }
  steps_.push_back(CircuitStep{std::move(name), std::move(params),
                               std::move(wires), std::move(gate)});
  return *this;
}

std::size_t Circuit::count_arity(std::size_t arity) const {
  std::size_t n = 0;
  for (const auto& s : steps_) n += (s.wires.size() == arity);
  return n;
}

Circuit Circuit::without_step(std::size_t index) const {
  if (index >= steps_.size()) throw std::out_of_range("without_step: bad index");
  Circuit out(dims_);
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i != index) out.steps_.push_back(steps_[i]);
  }
  return out;
}

bool Circuit::operator==(const Circuit& other) const {
  if (!(dims_ == other.dims_) || steps_.size() != other.steps_.size()) return false;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const auto& a = steps_[i];
    const auto& b = other.steps_[i];
    if (a.name != b.name || a.params != b.params || a.wires != b.wires) return false;
    if (a.gate.matrix() != b.gate.matrix()) return false;
  }
  return true;
}

Matrix circuit_unitary(const Circuit& circ) {
  const auto n = static_cast<Eigen::Index>(circ.dims().total_dim());
  Matrix u = Matrix::Identity(n, n);
  for (const auto& step : circ.steps()) {
    apply_to_columns(u, step.gate, step.wires, circ.dims());
  }
  return u;
}

PureState run(const Circuit& circ, const PureState& state) {
  if (!(state.dims() == circ.dims())) {
    throw std::invalid_argument("run: state register " + state.dims().to_string() +
                                " does not match circuit " + circ.dims().to_string());
  }
  Matrix column = state.amplitudes();
  for (const auto& step : circ.steps()) {
    apply_to_columns(column, step.gate, step.wires, circ.dims());
  }
  return PureState(circ.dims(), column.col(0));
}

}  // namespace qts
