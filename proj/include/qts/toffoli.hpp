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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qts/circuit.hpp"
#include "qts/gate_matrix.hpp"

namespace qts {

/**
 * Toffoli-sign gate on two qubits (wires 0, 1) and a qutrit (wire 2):
 * X_A(2), CNOT(1,2), CS(0,2), CNOT(1,2), X_A(2). The sign lands on |1,0,1>.
 */
Circuit build_ts_circuit();

/**
 * n-control Toffoli-sign gate on dims (2,...,2,n+1): controls are wires
 * 0..n-1, the (n+1)-level target is wire n. Uses 2n-1 two-wire gates.
 *
 * The target's qubit levels carry the branch in which every control seen so
 * far is 1. Each CNOT toggles that branch, and the branch that failed the
 * latest control is parked in a fresh level (3, 4, ..., n). Level 2 holds
 * the target=0 branch from the opening X_A. The central CS picks up the
 * all-ones branch, then the sequence is mirrored. For even n >= 4 the
 * all-ones branch ends on level 0, so a LEVELSWAP(0,1) pair around the CS
 * moves it to level 1. n = 2 reproduces build_ts_circuit() exactly.
 */
Circuit build_n_ts_circuit(unsigned n);

/// Qubit-register index of the component build_n_ts_circuit(n) flips:
/// |1,0,1> for n = 2, all ones otherwise.
std::size_t ts_flipped_component(unsigned n);

/// Wraps `circ` with Hadamards on `target`, turning a T-S gate into a
/// Toffoli up to bit flips.
Circuit with_target_hadamards(const Circuit& circ, std::size_t target);

/// Diagonal +-1 oracle on n+1 qubits with -1 at `flipped_component`.
GateMatrix oracle_n_toffoli_sign(unsigned n, std::size_t flipped_component);

/// Brute-force truth table of the n-controlled NOT (last qubit is the target).
GateMatrix oracle_n_toffoli(unsigned n);

/// Full-register indices of the basis states with every wire in {0,1},
/// ordered like the corresponding qubit register.
std::vector<std::size_t> qubit_subspace_indices(const WireDims& dims);

/// `full` restricted to rows and columns of the qubit subspace.
Matrix restrict_to_qubits(const Matrix& full, const WireDims& dims);

/// X^mask * m * X^mask on `num_qubits` qubits; bit (num_qubits-1-w) of
/// `mask` flips wire w.
Matrix conjugate_by_x_flips(const Matrix& m, std::size_t mask, std::size_t num_qubits);

struct DecompositionReport {
  unsigned n = 0;
  std::string dims;
  std::size_t two_qudit_gate_count = 0;
  std::size_t single_qudit_gate_count = 0;
  std::size_t expected_two_qudit_gate_count = 0;
  unsigned max_level_used = 0;
  /// |tr(O^dagger R)| / dim, R the circuit restricted to the qubit subspace.
  double fidelity_to_oracle = 0.0;
  /// max |R - phase * O| with the best global phase.
  double max_deviation = 0.0;
  /// Largest output norm outside the qubit subspace over qubit basis inputs.
  double leakage = 0.0;
  std::size_t oracle_component = 0;
  /// Components of R whose sign differs from the majority.
  std::vector<std::size_t> flipped_components;
  /// X-flip mask making the oracle match R, when one exists.
  std::optional<std::size_t> local_flip_mask;
  std::map<std::string, int> reference_counts;

  bool passed(double tol) const;
};

/// Compares a T-S circuit against a sign oracle on the qubit subspace. Never
/// throws on a mismatch; the report carries the residuals.
DecompositionReport verify_decomposition(const Circuit& circ, const GateMatrix& oracle,
                                         unsigned n);

}  // namespace qts
