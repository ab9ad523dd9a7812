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

#include "qts/toffoli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qts/qudit_gates.hpp"

namespace qts {

namespace {

void add_level_swap(Circuit& c, unsigned j, unsigned k, std::size_t wire) {
  const unsigned d = c.dims()[wire];
  const auto lo = std::min(j, k), hi = std::max(j, k);
  if (lo == 0 && hi == 2) {
    c.add("XA", {}, {wire}, gate_xa(d));
  } else if (lo == 1 && hi == 3) {
    c.add("XB", {}, {wire}, gate_xb(d));
  } else {
    c.add("LEVELSWAP", {double(j), double(k)}, {wire}, gate_level_swap(j, k, d));
  }
}

}  // namespace

Circuit build_ts_circuit() {
  Circuit c(WireDims{2, 2, 3});
  c.add("XA", {}, {2}, gate_xa(3));
  c.add("CNOT", {}, {1, 2}, gate_cnot(2, 3));
  c.add("CS", {}, {0, 2}, gate_cs(2, 3));
  c.add("CNOT", {}, {1, 2}, gate_cnot(2, 3));
  c.add("XA", {}, {2}, gate_xa(3));
  return c;
}

Circuit build_n_ts_circuit(unsigned n) {
  if (n < 2) throw std::invalid_argument("n-Toffoli needs at least 2 controls");
  std::vector<unsigned> dims(n, 2);
  dims.push_back(n + 1);
  const std::size_t t = n;
  const unsigned td = n + 1;

  Circuit half(WireDims{dims});
  add_level_swap(half, 0, 2, t);
  unsigned active = 1;
  unsigned next_park = 3;
  for (unsigned k = n; k >= 2; --k) {
    half.add("CNOT", {}, {k - 1, t}, gate_cnot(2, td));
    active ^= 1u;
    if (k > 2) add_level_swap(half, active ^ 1u, next_park++, t);
  }
  if (active == 0 && n >= 4) add_level_swap(half, 0, 1, t);

  Circuit out(WireDims{dims});
  for (const auto& s : half.steps()) out.add(s.name, s.params, s.wires, s.gate);
  out.add("CS", {}, {0, t}, gate_cs(2, td));
  for (auto it = half.steps().rbegin(); it != half.steps().rend(); ++it) {
    out.add(it->name, it->params, it->wires, it->gate);
  }
  return out;
}

Circuit with_target_hadamards(const Circuit& circ, std::size_t target) {
  Circuit out(circ.dims());
  const GateMatrix h = gate_hadamard(circ.dims()[target]);
  out.add("H", {}, {target}, h);
  for (const auto& s : circ.steps()) out.add(s.name, s.params, s.wires, s.gate);
  out.add("H", {}, {target}, h);
  return out;
}

std::size_t ts_flipped_component(unsigned n) {
  if (n < 2) throw std::invalid_argument("T-S gate needs at least two controls");
  return n == 2 ? 0b101u : (std::size_t{1} << (n + 1)) - 1;
}

GateMatrix oracle_n_toffoli_sign(unsigned n, std::size_t flipped_component) {
  const std::size_t dim = std::size_t{1} << (n + 1);
  if (flipped_component >= dim) {
    throw std::out_of_range("oracle component " + std::to_string(flipped_component) +
                            " outside a " + std::to_string(n + 1) + "-qubit register");
  }
  Matrix m = Matrix::Identity(dim, dim);
  m(flipped_component, flipped_component) = -1.0;
  return GateMatrix(std::vector<unsigned>(n + 1, 2), std::move(m));
}

GateMatrix oracle_n_toffoli(unsigned n) {
  const std::size_t dim = std::size_t{1} << (n + 1);
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t in = 0; in < dim; ++in) {
    const bool all_controls = (in >> 1) == (dim >> 1) - 1;
    const std::size_t out = all_controls ? (in ^ 1u) : in;
    m(out, in) = 1.0;
  }
  return GateMatrix(std::vector<unsigned>(n + 1, 2), std::move(m));
}

std::vector<std::size_t> qubit_subspace_indices(const WireDims& dims) {
  const std::size_t nw = dims.num_wires();
  std::vector<std::size_t> out(std::size_t{1} << nw);
  for (std::size_t q = 0; q < out.size(); ++q) {
    std::size_t idx = 0;
    for (std::size_t w = 0; w < nw; ++w) {
      const std::size_t bit = (q >> (nw - 1 - w)) & 1u;
      idx += bit * dims.stride(w);
    }
    out[q] = idx;
  }
  return out;
}

Matrix restrict_to_qubits(const Matrix& full, const WireDims& dims) {
  const auto idx = qubit_subspace_indices(dims);
  const auto d = static_cast<Eigen::Index>(idx.size());
  Matrix r(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) r(i, j) = full(idx[i], idx[j]);
  }
  return r;
}

Matrix conjugate_by_x_flips(const Matrix& m, std::size_t mask, std::size_t num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  if (m.rows() != static_cast<Eigen::Index>(dim) || m.cols() != m.rows()) {
    throw std::invalid_argument("conjugate_by_x_flips: matrix size does not match qubits");
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = m(i ^ mask, j ^ mask);
  }
  return out;
}

bool DecompositionReport::passed(double tol) const {
  return std::abs(fidelity_to_oracle - 1.0) < tol && max_deviation < tol &&
         leakage < 1e-12 && two_qudit_gate_count == expected_two_qudit_gate_count;
}

DecompositionReport verify_decomposition(const Circuit& circ, const GateMatrix& oracle,
                                         unsigned n) {
  const WireDims& dims = circ.dims();
  if (dims.num_wires() != n + 1) {
    throw std::invalid_argument("verify_decomposition: circuit has " +
                                std::to_string(dims.num_wires()) + " wires, expected " +
                                std::to_string(n + 1));
  }
  for (std::size_t w = 0; w < n; ++w) {
    if (dims[w] != 2) throw std::invalid_argument("verify_decomposition: control wire is not a qubit");
  }
  const std::size_t qdim = std::size_t{1} << (n + 1);
  if (oracle.dim() != qdim) {
    throw std::invalid_argument("verify_decomposition: oracle dimension mismatch");
  }

  DecompositionReport rep;
  rep.n = n;
  rep.dims = dims.to_string();
  rep.two_qudit_gate_count = circ.count_arity(2);
  rep.single_qudit_gate_count = circ.count_arity(1);
  rep.expected_two_qudit_gate_count = 2 * n - 1;
  rep.reference_counts = {{"qubit_only_toffoli_two_qubit_gates", 5},
                          {"qubit_only_toffoli_cs_gates", 6},
                          {"qubit_only_5_toffoli_two_qubit_gates", 64},
                          {"qudit_construction_2n_minus_1", int(2 * n - 1)}};

  const Matrix& o = oracle.matrix();
  for (std::size_t i = 0; i < qdim; ++i) {
    if (std::abs(o(i, i) + 1.0) < 1e-12) rep.oracle_component = i;
  }

  // Evolve every qubit basis input step by step, tracking the highest level
  // touched on any wire.
  const auto idx = qubit_subspace_indices(dims);
  Matrix cols = Matrix::Zero(dims.total_dim(), qdim);
  for (std::size_t q = 0; q < qdim; ++q) cols(idx[q], q) = 1.0;
  auto track_levels = [&](const Matrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (m.row(r).cwiseAbs().maxCoeff() < 1e-12) continue;
      const Digits dg = basis_digits(static_cast<std::size_t>(r), dims);
      rep.max_level_used = std::max(rep.max_level_used, *std::max_element(dg.begin(), dg.end()));
    }
  };
  track_levels(cols);
  for (const auto& step : circ.steps()) {
    apply_to_columns(cols, step.gate, step.wires, dims);
    track_levels(cols);
  }

  std::vector<bool> in_subspace(dims.total_dim(), false);
  for (auto i : idx) in_subspace[i] = true;
  Matrix restricted(qdim, qdim);
  for (std::size_t q = 0; q < qdim; ++q) {
    for (std::size_t p = 0; p < qdim; ++p) restricted(p, q) = cols(idx[p], q);
    double leaked = 0.0;
    for (std::size_t r = 0; r < dims.total_dim(); ++r) {
      if (!in_subspace[r]) leaked += std::norm(cols(r, q));
    }
    rep.leakage = std::max(rep.leakage, std::sqrt(leaked));
  }

  rep.fidelity_to_oracle =
      std::abs((o.adjoint() * restricted).trace()) / static_cast<double>(qdim);
  rep.max_deviation = equiv_up_to_global_phase(restricted, o, 1.0).residual;

  Complex diag_sum = restricted.diagonal().sum();
  const Complex ref = std::abs(diag_sum) > 0 ? diag_sum / std::abs(diag_sum) : Complex{1.0};
  for (std::size_t i = 0; i < qdim; ++i) {
    if ((restricted(i, i) * std::conj(ref)).real() < -0.5) rep.flipped_components.push_back(i);
  }

  for (std::size_t mask = 0; mask < qdim; ++mask) {
    const Matrix flipped = conjugate_by_x_flips(o, mask, n + 1);
    if (equiv_up_to_global_phase(restricted, flipped, 1e-10).equivalent) {
      rep.local_flip_mask = mask;
      break;
    }
  }
  return rep;
}

}  // namespace qts
