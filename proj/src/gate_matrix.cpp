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

#include "qts/gate_matrix.hpp"

#include <limits>
#include <set>
#include <stdexcept>
#include <string>

namespace qts {

double unitarity_residual(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  const Matrix defect = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  return max_abs(defect);
}

bool is_unitary(const Matrix& m, double tol) {
  return unitarity_residual(m) < tol;
}

GateMatrix::GateMatrix(std::vector<unsigned> wire_dims, Matrix matrix)
    : wire_dims_(std::move(wire_dims)), matrix_(std::move(matrix)) {
  if (wire_dims_.empty()) throw std::invalid_argument("GateMatrix: no wires");
  std::size_t d = 1;
  for (unsigned w : wire_dims_) {
    if (w < 2) throw std::invalid_argument("GateMatrix: wire dimension < 2");
    d *= w;
  }
  if (matrix_.rows() != static_cast<Eigen::Index>(d) ||
      matrix_.cols() != static_cast<Eigen::Index>(d)) {
    throw std::invalid_argument(
        "GateMatrix: matrix is " + std::to_string(matrix_.rows()) + "x" +
        std::to_string(matrix_.cols()) + ", wire dims require " +
        std::to_string(d));
  }
  const double r = unitarity_residual(matrix_);
  if (!(r < kGateUnitarityTol)) {
    throw std::invalid_argument("GateMatrix: not unitary (residual " +
                                std::to_string(r) + ")");
  }
}

GateMatrix GateMatrix::adjoint() const {
  return GateMatrix(wire_dims_, matrix_.adjoint());
}

namespace {

void check_targets(const GateMatrix& gate, std::span<const std::size_t> wires,
                   const WireDims& dims) {
  if (wires.size() != gate.arity()) {
    throw std::invalid_argument("gate of arity " + std::to_string(gate.arity()) +
                                " applied to " + std::to_string(wires.size()) +
                                " wires");
  }
  std::set<std::size_t> seen;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    const std::size_t w = wires[k];
    if (w >= dims.num_wires()) {
      throw std::out_of_range("wire " + std::to_string(w) +
                              " outside register " + dims.to_string());
    }
    if (!seen.insert(w).second) {
      throw std::invalid_argument("repeated wire index " + std::to_string(w));
    }
    if (dims[w] != gate.wire_dims()[k]) {
      throw std::invalid_argument(
          "dimension mismatch on wire " + std::to_string(w) + ": register has " +
          std::to_string(dims[w]) + ", gate expects " +
          std::to_string(gate.wire_dims()[k]));
    }
  }
}

}  // namespace

void apply_to_columns(Matrix& columns, const GateMatrix& gate,
                      std::span<const std::size_t> wires, const WireDims& dims) {
  check_targets(gate, wires, dims);
  if (columns.rows() != static_cast<Eigen::Index>(dims.total_dim())) {
    throw std::invalid_argument("apply_to_columns: row count does not match register");
  }
  const std::size_t gd = gate.dim();

  // Offset of each local basis state relative to a base index whose target
  // digits are all zero.
  std::vector<std::size_t> offsets(gd, 0);
  for (std::size_t local = 0; local < gd; ++local) {
    std::size_t rem = local;
    for (std::size_t k = wires.size(); k-- > 0;) {
      const unsigned d = gate.wire_dims()[k];
      offsets[local] += (rem % d) * dims.stride(wires[k]);
      rem /= d;
    }
  }

  Matrix block(static_cast<Eigen::Index>(gd), columns.cols());
  for (std::size_t base = 0; base < dims.total_dim(); ++base) {
    bool is_base = true;
    for (std::size_t w : wires) {
      if ((base / dims.stride(w)) % dims[w] != 0) {
        is_base = false;
        break;
      }
    }
    if (!is_base) continue;
    for (std::size_t l = 0; l < gd; ++l) {
      block.row(static_cast<Eigen::Index>(l)) =
          columns.row(static_cast<Eigen::Index>(base + offsets[l]));
    }
    block = gate.matrix() * block;
    for (std::size_t l = 0; l < gd; ++l) {
      columns.row(static_cast<Eigen::Index>(base + offsets[l])) =
          block.row(static_cast<Eigen::Index>(l));
    }
  }
}

Matrix embed(const GateMatrix& gate, std::span<const std::size_t> wires,
             const WireDims& dims) {
  const auto n = static_cast<Eigen::Index>(dims.total_dim());
  Matrix full = Matrix::Identity(n, n);
  apply_to_columns(full, gate, wires, dims);
  return full;
}

PhaseMatch equiv_up_to_global_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("equiv_up_to_global_phase: shape mismatch");
  }
  PhaseMatch out;
  const Complex overlap = (b.adjoint() * a).trace();
  if (std::abs(overlap) > 0.0) out.phase = overlap / std::abs(overlap);
  out.residual = max_abs(a - out.phase * b);
  out.equivalent = out.residual < tol;
  return out;
}

}  // namespace qts
