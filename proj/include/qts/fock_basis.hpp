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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qts/types.hpp"

namespace qts {

/// Photon count per optical mode.
using Occupation = std::vector<unsigned>;

/// C(photons + modes - 1, photons).
std::size_t fock_dimension(std::size_t modes, unsigned photons);

/**
 * All occupations of `modes` modes holding exactly `photons` photons, in
 * descending lexicographic order: (N,0,...,0) first, (0,...,0,N) last.
 */
class FockBasis {
 public:
  FockBasis(std::size_t modes, unsigned photons);

  std::size_t modes() const { return modes_; }
  unsigned photons() const { return photons_; }
  std::size_t size() const { return states_.size(); }
  const Occupation& state(std::size_t i) const { return states_.at(i); }
  const std::vector<Occupation>& states() const { return states_; }

  std::optional<std::size_t> find(const Occupation& occ) const;
  /// Throws std::invalid_argument if `occ` is not in the basis.
  std::size_t index_of(const Occupation& occ) const;

  bool operator==(const FockBasis& o) const {
    return modes_ == o.modes_ && photons_ == o.photons_;
  }

 private:
  std::size_t modes_;
  unsigned photons_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

using FockBasisPtr = std::shared_ptr<const FockBasis>;

std::string occupation_label(const Occupation& occ);

/// Amplitude vector over a FockBasis. Not forced to unit norm, so it can
/// also hold post-selected (sub-normalized) states.
class OpticalState {
 public:
  OpticalState(FockBasisPtr basis, Vector amps);

  /// Single basis state.
  static OpticalState fock(FockBasisPtr basis, const Occupation& occ);

  const FockBasis& basis() const { return *basis_; }
  const FockBasisPtr& basis_ptr() const { return basis_; }
  const Vector& amplitudes() const { return amps_; }
  Vector& amplitudes() { return amps_; }
  Complex amplitude(const Occupation& occ) const;
  double norm() const { return amps_.norm(); }

 private:
  FockBasisPtr basis_;
  Vector amps_;
};

}  // namespace qts
