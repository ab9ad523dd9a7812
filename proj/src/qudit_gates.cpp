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

#include "qts/qudit_gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qts {

GateMatrix gate_level_swap(unsigned j, unsigned k, unsigned d) {
  if (j >= d || k >= d) {
    throw std::out_of_range("level swap (" + std::to_string(j) + "," +
                            std::to_string(k) + ") outside dimension " +
                            std::to_string(d));
  }
  if (j == k) throw std::invalid_argument("level swap needs two distinct levels");
  Matrix m = Matrix::Identity(d, d);
  m(j, j) = 0.0;
  m(k, k) = 0.0;
  m(j, k) = 1.0;
  m(k, j) = 1.0;
  return GateMatrix({d}, std::move(m));
}

GateMatrix gate_xa(unsigned d) {
  if (d < 3) throw std::invalid_argument("X_A needs a wire with at least 3 levels");
  return gate_level_swap(0, 2, d);
}

GateMatrix gate_xb(unsigned d) {
  if (d < 4) throw std::invalid_argument("X_B needs a wire with at least 4 levels");
  return gate_level_swap(1, 3, d);
}

GateMatrix gate_hadamard(unsigned d) {
  if (d < 2) throw std::invalid_argument("Hadamard needs d >= 2");
  const double h = 1.0 / std::sqrt(2.0);
  Matrix m = Matrix::Identity(d, d);
  m(0, 0) = h;
  m(0, 1) = h;
  m(1, 0) = h;
  m(1, 1) = -h;
  return GateMatrix({d}, std::move(m));
}

GateMatrix gate_cs(unsigned control_dim, unsigned target_dim) {
  if (control_dim < 2 || target_dim < 2) {
    throw std::invalid_argument("C-S needs wire dimensions >= 2");
  }
  const unsigned n = control_dim * target_dim;
  Matrix m = Matrix::Identity(n, n);
  m(target_dim + 1, target_dim + 1) = -1.0;
  return GateMatrix({control_dim, target_dim}, std::move(m));
}

GateMatrix gate_cnot(unsigned control_dim, unsigned target_dim) {
  if (control_dim < 2 || target_dim < 2) {
    throw std::invalid_argument("CNOT needs wire dimensions >= 2");
  }
  const unsigned n = control_dim * target_dim;
  Matrix m = Matrix::Identity(n, n);
  const unsigned a = target_dim;      // |1,0>
  const unsigned b = target_dim + 1;  // |1,1>
  m(a, a) = 0.0;
  m(b, b) = 0.0;
  m(a, b) = 1.0;
  m(b, a) = 1.0;
  return GateMatrix({control_dim, target_dim}, std::move(m));
}

namespace {

unsigned level_param(double p, const std::string& name) {
  if (p < 0 || std::floor(p) != p) {
    throw std::invalid_argument(name + ": level parameter must be a non-negative integer");
  }
  return static_cast<unsigned>(p);
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

GateMatrix resolve_named_gate(const std::string& name, std::span<const double> params,
                              std::span<const unsigned> wire_dims) {
  const std::size_t arity = wire_dims.size();
  if (name == "XA" || name == "XB" || name == "H") {
    expect(arity == 1 && params.empty(), name + " takes one wire and no parameters");
    if (name == "XA") return gate_xa(wire_dims[0]);
    if (name == "XB") return gate_xb(wire_dims[0]);
    return gate_hadamard(wire_dims[0]);
  }
  if (name == "LEVELSWAP") {
    expect(arity == 1 && params.size() == 2, "LEVELSWAP(j,k) takes one wire");
    return gate_level_swap(level_param(params[0], name), level_param(params[1], name),
                           wire_dims[0]);
  }
  if (name == "CS" || name == "CNOT") {
    expect(arity == 2 && params.empty(), name + " takes two wires and no parameters");
    return name == "CS" ? gate_cs(wire_dims[0], wire_dims[1])
                        : gate_cnot(wire_dims[0], wire_dims[1]);
  }
  throw std::invalid_argument("unknown gate '" + name + "'");
}

}  // namespace qts
