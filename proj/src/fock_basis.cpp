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

#include "qts/fock_basis.hpp"

#include <functional>
#include <stdexcept>

namespace qts {

std::size_t fock_dimension(std::size_t modes, unsigned photons) {
  if (modes == 0) return photons == 0 ? 1 : 0;
  // C(photons + modes - 1, photons), built incrementally to stay exact.
  std::size_t result = 1;
  for (unsigned k = 1; k <= photons; ++k) {
    result = result * (modes - 1 + k) / k;
  }
  return result;
}

FockBasis::FockBasis(std::size_t modes, unsigned photons)
    : modes_(modes), photons_(photons) {
  if (modes == 0) throw std::invalid_argument("FockBasis: no modes");
  states_.reserve(fock_dimension(modes, photons));
  Occupation occ(modes, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t mode, unsigned left) {
    if (mode + 1 == modes) {
      occ[mode] = left;
      states_.push_back(occ);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      occ[mode] = k;
      fill(mode + 1, left - k);
    }
  };
  fill(0, photons);
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

std::optional<std::size_t> FockBasis::find(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::index_of(const Occupation& occ) const {
  auto i = find(occ);
  if (!i) {
    throw std::invalid_argument("occupation " + occupation_label(occ) +
                                " is not in the " + std::to_string(modes_) + "-mode, " +
                                std::to_string(photons_) + "-photon basis");
  }
  return *i;
}

std::string occupation_label(const Occupation& occ) {
  std::string s = "|";
  for (unsigned n : occ) s += std::to_string(n);
  return s + ">";
}

OpticalState::OpticalState(FockBasisPtr basis, Vector amps)
    : basis_(std::move(basis)), amps_(std::move(amps)) {
  if (!basis_) throw std::invalid_argument("OpticalState: null basis");
  if (amps_.size() != static_cast<Eigen::Index>(basis_->size())) {
    throw std::invalid_argument("OpticalState: amplitude count does not match basis");
  }
}

OpticalState OpticalState::fock(FockBasisPtr basis, const Occupation& occ) {
  Vector amps = Vector::Zero(static_cast<Eigen::Index>(basis->size()));
  amps(static_cast<Eigen::Index>(basis->index_of(occ))) = 1.0;
  return OpticalState(std::move(basis), std::move(amps));
}

Complex OpticalState::amplitude(const Occupation& occ) const {
  return amps_(static_cast<Eigen::Index>(basis_->index_of(occ)));
}

}  // namespace qts
