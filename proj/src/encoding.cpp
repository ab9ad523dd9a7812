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

#include "qts/encoding.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qts {

ModeLayout::ModeLayout(std::size_t modes, std::vector<std::vector<std::size_t>> groups)
    : modes_(modes), groups_(std::move(groups)) {
  if (groups_.empty()) throw std::invalid_argument("ModeLayout: no wires");
  std::set<std::size_t> seen;
  for (const auto& g : groups_) {
    if (g.size() < 2) throw std::invalid_argument("ModeLayout: a wire needs at least two modes");
    for (auto m : g) {
      if (m >= modes_) throw std::out_of_range("ModeLayout: mode " + std::to_string(m) + " out of range");
      if (!seen.insert(m).second) {
        throw std::invalid_argument("ModeLayout: mode " + std::to_string(m) + " used twice");
      }
    }
  }
}

WireDims ModeLayout::logical_dims() const {
  std::vector<unsigned> dims;
  for (const auto& g : groups_) dims.push_back(static_cast<unsigned>(g.size()));
  return WireDims(dims);
}

Occupation ModeLayout::occupation(std::span<const unsigned> digits) const {
  if (digits.size() != groups_.size()) {
    throw std::invalid_argument("ModeLayout: expected " + std::to_string(groups_.size()) +
                                " digits");
  }
  Occupation occ(modes_, 0);
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (digits[w] >= groups_[w].size()) {
      throw std::domain_error("ModeLayout: level " + std::to_string(digits[w]) +
                              " on wire " + std::to_string(w) + " exceeds its " +
                              std::to_string(groups_[w].size()) + " modes");
    }
    occ[groups_[w][digits[w]]] = 1;
  }
  return occ;
}

namespace {

void check_basis(const ModeLayout& layout, const FockBasis& basis) {
  if (basis.modes() != layout.modes() || basis.photons() != layout.num_wires()) {
    throw std::invalid_argument("encoding needs a " + std::to_string(layout.modes()) +
                                "-mode basis with one photon per wire");
  }
}

}  // namespace

OpticalState encode_dual_rail(std::span<const unsigned> digits, const ModeLayout& layout,
                              const FockBasisPtr& basis) {
  check_basis(layout, *basis);
  return OpticalState::fock(basis, layout.occupation(digits));
}

OpticalState encode_state(const PureState& logical, const ModeLayout& layout,
                          const FockBasisPtr& basis) {
  check_basis(layout, *basis);
  if (!(logical.dims() == layout.logical_dims())) {
    throw std::invalid_argument("encode_state: logical register does not match layout");
  }
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(basis->size()));
  for (std::size_t i = 0; i < logical.dims().total_dim(); ++i) {
    const Digits d = basis_digits(i, logical.dims());
    amps(static_cast<Eigen::Index>(basis->index_of(layout.occupation(d)))) =
        logical.amplitudes()(static_cast<Eigen::Index>(i));
  }
  return OpticalState(basis, std::move(amps));
}

PureState Decoded::normalized() const {
  const double n = amplitudes.norm();
  if (n < 1e-15) throw std::runtime_error("decoded state has no logical component");
  return PureState(dims, amplitudes / n);
}

Decoded decode_dual_rail(const OpticalState& state, const ModeLayout& layout) {
  if (state.basis().modes() != layout.modes()) {
    throw std::invalid_argument("decode: state and layout have different mode counts");
  }
  Decoded out{layout.logical_dims(), {}, 0.0};
  out.amplitudes = Vector::Zero(static_cast<Eigen::Index>(out.dims.total_dim()));
  std::vector<bool> logical(state.basis().size(), false);
  if (state.basis().photons() == layout.num_wires()) {
    for (std::size_t i = 0; i < out.dims.total_dim(); ++i) {
      const Digits d = basis_digits(i, out.dims);
      const std::size_t idx = *state.basis().find(layout.occupation(d));
      out.amplitudes(static_cast<Eigen::Index>(i)) = state.amplitudes()(static_cast<Eigen::Index>(idx));
      logical[idx] = true;
    }
  }
  double leaked = 0.0;
  for (std::size_t i = 0; i < logical.size(); ++i) {
    if (!logical[i]) leaked += std::norm(state.amplitudes()(static_cast<Eigen::Index>(i)));
  }
  out.leaked_norm = std::sqrt(leaked);
  return out;
}

}  // namespace qts
