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

#include "qts/gate_matrix.hpp"

namespace qts {

/// Transposition of levels j and k on a d-level wire.
GateMatrix gate_level_swap(unsigned j, unsigned k, unsigned d);

/// Swaps levels 0 and 2, fixes the rest. Requires d >= 3.
GateMatrix gate_xa(unsigned d);

/// Swaps levels 1 and 3, fixes the rest. Requires d >= 4.
GateMatrix gate_xb(unsigned d);

/// Hadamard on levels {0,1}, identity on any higher level.
GateMatrix gate_hadamard(unsigned d);

// Two-wire gates below act only on the {0,1}x{0,1} block of (control,
// target); every other basis state is left alone, so a target parked in a
// level >= 2 sees the identity whatever the control does.

/// Controlled sign: -1 on |1,1>.
GateMatrix gate_cs(unsigned control_dim, unsigned target_dim);

/// Controlled NOT: |1,0> <-> |1,1>.
GateMatrix gate_cnot(unsigned control_dim, unsigned target_dim);

/**
 * Resolves a gate by name for circuit files: XA, XB, LEVELSWAP(j,k), H, CS,
 * CNOT. `wire_dims` are the dimensions of the target wires in order.
 */
GateMatrix resolve_named_gate(const std::string& name, std::span<const double> params,
                              std::span<const unsigned> wire_dims);

}  // namespace qts
