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
#include <vector>

#include "qts/types.hpp"
#include "qts/wire_dims.hpp"

namespace qts {

/// Unitarity tolerance applied when a GateMatrix is constructed.
inline constexpr double kGateUnitarityTol = 1e-10;

double unitarity_residual(const Matrix& m);
bool is_unitary(const Matrix& m, double tol);

/**
 * Square unitary acting on an ordered list of wires with the given
 * dimensions. The first wire is the most significant local digit.
 */
class GateMatrix {
 public:
  GateMatrix(std::vector<unsigned> wire_dims, Matrix matrix);

  std::size_t arity() const { return wire_dims_.size(); }
  const std::vector<unsigned>& wire_dims() const { return wire_dims_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }

  GateMatrix adjoint() const;

 private:
  std::vector<unsigned> wire_dims_;
  Matrix matrix_;
};

/**
 * Applies `gate` on `wires` (identity elsewhere) to every column of `columns`,
 * whose rows are indexed by the register `dims`.
 */
void apply_to_columns(Matrix& columns, const GateMatrix& gate,
                      std::span<const std::size_t> wires, const WireDims& dims);

/// The gate embedded as a total_dim x total_dim operator.
Matrix embed(const GateMatrix& gate, std::span<const std::size_t> wires,
             const WireDims& dims);

struct PhaseMatch {
  bool equivalent = false;
  Complex phase{1.0, 0.0};
  /// max |A - phase * B| for the best unit-modulus phase.
  double residual = 0.0;
};

/// Whether A = phase * B for some |phase| = 1, within `tol` elementwise.
PhaseMatch equiv_up_to_global_phase(const Matrix& a, const Matrix& b, double tol);

}  // namespace qts
