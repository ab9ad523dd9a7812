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

#include "qts/optical_circuit.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "qts/gate_matrix.hpp"

namespace qts {

namespace {

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Adds scale * U|in> to `out` by expanding prod_i (sum_j U(j, i) a_j^dag).
void expand_into(const Matrix& u, const Occupation& in, const FockBasis& basis,
                 Complex scale, Vector& out) {
  std::vector<std::size_t> photons;
  double in_norm = 1.0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    for (unsigned k = 0; k < in[i]; ++k) photons.push_back(i);
    in_norm *= factorial(in[i]);
  }
  std::map<Occupation, Complex> terms{{Occupation(in.size(), 0), scale / std::sqrt(in_norm)}};
  for (std::size_t p : photons) {
    std::map<Occupation, Complex> next;
    for (const auto& [occ, c] : terms) {
      for (Eigen::Index j = 0; j < u.rows(); ++j) {
        const Complex uj = u(j, static_cast<Eigen::Index>(p));
        if (uj == Complex{}) continue;
        Occupation o = occ;
        ++o[static_cast<std::size_t>(j)];
        next[o] += c * uj;
      }
    }
    terms = std::move(next);
  }
  for (const auto& [occ, c] : terms) {
    double out_norm = 1.0;
    for (unsigned n : occ) out_norm *= factorial(n);
    out(static_cast<Eigen::Index>(basis.index_of(occ))) += c * std::sqrt(out_norm);
  }
}

void check_modes(const OpticalState& s, std::initializer_list<std::size_t> modes) {
  std::set<std::size_t> seen;
  for (auto m : modes) {
    if (m >= s.basis().modes()) throw std::out_of_range("mode " + std::to_string(m) + " out of range");
    if (!seen.insert(m).second) throw std::invalid_argument("repeated mode " + std::to_string(m));
  }
}

}  // namespace

OpticalCircuit& OpticalCircuit::add(OpticalElement element) {
  std::set<std::size_t> seen;
  for (auto m : element.modes) {
    if (m >= modes_) {
      throw std::out_of_range(kind_name(element.kind) + ": mode " + std::to_string(m) +
                              " outside a " + std::to_string(modes_) + "-mode circuit");
    }
    if (!seen.insert(m).second) {
      throw std::invalid_argument(kind_name(element.kind) + ": repeated mode " +
                                  std::to_string(m));
    }
  }
  elements_.push_back(std::move(element));
  return *this;
}

OpticalCircuit& OpticalCircuit::append(const OpticalCircuit& other) {
  if (other.modes_ > modes_) throw std::invalid_argument("append: circuit has more modes");
  for (const auto& e : other.elements_) add(e);
  return *this;
}

std::size_t OpticalCircuit::count(ElementKind kind) const {
  std::size_t n = 0;
  for (const auto& e : elements_) n += (e.kind == kind);
  return n;
}

bool OpticalCircuit::is_linear() const { return count(ElementKind::kCrossKerr) == 0; }

Matrix single_photon_transfer(std::span<const OpticalElement> elements, std::size_t modes) {
  Matrix u = Matrix::Identity(static_cast<Eigen::Index>(modes), static_cast<Eigen::Index>(modes));
  for (const auto& e : elements) {
    if (!e.is_linear()) {
      throw std::invalid_argument("single_photon_transfer: cross-Kerr element is not linear");
    }
    const RealMatrix b = e.block();
    const auto k = e.modes.size();
    // Only the rows of the touched modes change.
    Matrix rows(static_cast<Eigen::Index>(k), u.cols());
    for (std::size_t r = 0; r < k; ++r) {
      rows.row(static_cast<Eigen::Index>(r)).setZero();
      for (std::size_t c = 0; c < k; ++c) {
        const double v = b(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        if (v != 0.0) rows.row(static_cast<Eigen::Index>(r)) += v * u.row(static_cast<Eigen::Index>(e.modes[c]));
      }
    }
    for (std::size_t r = 0; r < k; ++r) {
      u.row(static_cast<Eigen::Index>(e.modes[r])) = rows.row(static_cast<Eigen::Index>(r));
    }
  }
  const double residual = unitarity_residual(u);
  if (!(residual < 1e-10)) {
    throw std::logic_error("single_photon_transfer: composed matrix not unitary (residual " +
                           std::to_string(residual) + ")");
  }
  return u;
}

Matrix single_photon_transfer(const OpticalCircuit& circuit) {
  return single_photon_transfer(circuit.elements(), circuit.modes());
}

Matrix lift_to_fock(const Matrix& mode_matrix, const FockBasis& basis) {
  if (mode_matrix.rows() != static_cast<Eigen::Index>(basis.modes()) ||
      mode_matrix.cols() != mode_matrix.rows()) {
    throw std::invalid_argument("lift_to_fock: mode matrix does not match the basis");
  }
  if (!is_unitary(mode_matrix, 1e-10)) {
    throw std::invalid_argument("lift_to_fock: mode matrix is not unitary");
  }
  const auto d = static_cast<Eigen::Index>(basis.size());
  Matrix out = Matrix::Zero(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    Vector col = Vector::Zero(d);
    expand_into(mode_matrix, basis.state(static_cast<std::size_t>(c)), basis, 1.0, col);
    out.col(c) = col;
  }
  return out;
}

OpticalState apply_linear(const OpticalState& state, const Matrix& mode_matrix) {
  const FockBasis& basis = state.basis();
  if (mode_matrix.rows() != static_cast<Eigen::Index>(basis.modes()) ||
      mode_matrix.cols() != mode_matrix.rows()) {
    throw std::invalid_argument("apply_linear: mode matrix does not match the basis");
  }
  Vector out = Vector::Zero(state.amplitudes().size());
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    const Complex a = state.amplitudes()(i);
    if (a == Complex{}) continue;
    expand_into(mode_matrix, basis.state(static_cast<std::size_t>(i)), basis, a, out);
  }
  return OpticalState(state.basis_ptr(), std::move(out));
}

OpticalState apply_kerr(const OpticalState& state, double chi, std::size_t mode_a,
                        std::size_t mode_b) {
  check_modes(state, {mode_a, mode_b});
  Vector out = state.amplitudes();
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    const auto& occ = state.basis().state(i);
    const double n = static_cast<double>(occ[mode_a]) * occ[mode_b];
    if (n != 0.0) out(static_cast<Eigen::Index>(i)) *= std::polar(1.0, chi * n);
  }
  return OpticalState(state.basis_ptr(), std::move(out));
}

OpticalState apply_element(const OpticalState& state, const OpticalElement& element) {
  if (element.kind == ElementKind::kCrossKerr) {
    return apply_kerr(state, element.value, element.modes[0], element.modes[1]);
  }
  const OpticalElement* one = &element;
  return apply_linear(state, single_photon_transfer(std::span(one, 1), state.basis().modes()));
}

OpticalState apply_hwp(const OpticalState& state, double theta_rad, std::size_t mode_h,
                       std::size_t mode_v) {
  check_modes(state, {mode_h, mode_v});
  return apply_element(state, half_wave_plate(theta_rad, mode_h, mode_v));
}

OpticalState apply_pbs(const OpticalState& state, std::size_t h1, std::size_t v1,
                       std::size_t h2, std::size_t v2) {
  check_modes(state, {h1, v1, h2, v2});
  return apply_element(state, polarizing_beam_splitter(h1, v1, h2, v2));
}

OpticalState evolve(const OpticalCircuit& circuit, const OpticalState& state) {
  if (circuit.modes() != state.basis().modes()) {
    throw std::invalid_argument("evolve: circuit and state have different mode counts");
  }
  OpticalState s = state;
  const auto& els = circuit.elements();
  std::size_t i = 0;
  while (i < els.size()) {
    if (!els[i].is_linear()) {
      s = apply_kerr(s, els[i].value, els[i].modes[0], els[i].modes[1]);
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < els.size() && els[j].is_linear()) ++j;
    s = apply_linear(s, single_photon_transfer(std::span(els).subspan(i, j - i), circuit.modes()));
    i = j;
  }
  return s;
}

Matrix circuit_operator(const OpticalCircuit& circuit, const FockBasisPtr& basis) {
  const auto d = static_cast<Eigen::Index>(basis->size());
  Matrix out(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const auto s = evolve(circuit, OpticalState::fock(basis, basis->state(static_cast<std::size_t>(c))));
    out.col(c) = s.amplitudes();
  }
  return out;
}

DetectionPattern& DetectionPattern::require(std::size_t mode, unsigned count) {
  if (mode >= per_mode_.size()) {
    throw std::out_of_range("detection pattern: mode " + std::to_string(mode) + " out of range");
  }
  per_mode_[mode] = count;
  return *this;
}

DetectionPattern& DetectionPattern::require_group(std::vector<std::size_t> group,
                                                  unsigned total) {
  for (auto m : group) {
    if (m >= per_mode_.size()) {
      throw std::out_of_range("detection pattern: mode " + std::to_string(m) + " out of range");
    }
  }
  groups_.emplace_back(std::move(group), total);
  return *this;
}

bool DetectionPattern::unconstrained() const {
  for (const auto& c : per_mode_) {
    if (c) return false;
  }
  return groups_.empty();
}

bool DetectionPattern::matches(const Occupation& occ) const {
  if (occ.size() != per_mode_.size()) return false;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    if (per_mode_[m] && *per_mode_[m] != occ[m]) return false;
  }
  for (const auto& [group, total] : groups_) {
    unsigned sum = 0;
    for (auto m : group) sum += occ[m];
    if (sum != total) return false;
  }
  return true;
}

OpticalState PostSelection::renormalized() const {
  if (vanished) throw std::runtime_error("post-selection has zero probability");
  return OpticalState(state.basis_ptr(), state.amplitudes() / std::sqrt(probability));
}

PostSelection postselect(const OpticalState& state, const DetectionPattern& pattern) {
  if (pattern.modes() != state.basis().modes()) {
    throw std::invalid_argument("postselect: pattern and state have different mode counts");
  }
  Vector kept = state.amplitudes();
  for (std::size_t i = 0; i < state.basis().size(); ++i) {
    if (!pattern.matches(state.basis().state(i))) kept(static_cast<Eigen::Index>(i)) = 0.0;
  }
  const double p = kept.squaredNorm();
  return PostSelection{OpticalState(state.basis_ptr(), std::move(kept)), p, p < 1e-15};
}

}  // namespace qts
