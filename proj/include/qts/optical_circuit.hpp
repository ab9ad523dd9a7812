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

#include <optional>
#include <span>
#include <vector>

#include "qts/fock_basis.hpp"
#include "qts/optical_element.hpp"

namespace qts {

/// Ordered element list over a fixed number of global modes.
class OpticalCircuit {
 public:
  explicit OpticalCircuit(std::size_t modes) : modes_(modes) {}

  /// Throws if the element touches a mode outside the circuit or repeats one.
  OpticalCircuit& add(OpticalElement element);
  OpticalCircuit& append(const OpticalCircuit& other);

  std::size_t modes() const { return modes_; }
  const std::vector<OpticalElement>& elements() const { return elements_; }
  std::size_t count(ElementKind kind) const;
  bool is_linear() const;

 private:
  std::size_t modes_;
  std::vector<OpticalElement> elements_;
};

/**
 * m x m single-photon transfer matrix of a linear element sequence. Column i
 * is the image of a photon entering mode i; later elements multiply from the
 * left. Throws std::invalid_argument on a cross-Kerr element and
 * std::logic_error if the product is not unitary to 1e-10.
 */
Matrix single_photon_transfer(std::span<const OpticalElement> elements, std::size_t modes);
Matrix single_photon_transfer(const OpticalCircuit& circuit);

/**
 * Many-photon unitary induced by `mode_matrix` on `basis`, computed by
 * expanding each product of creation operators. Throws if the input is not
 * unitary to 1e-10.
 */
Matrix lift_to_fock(const Matrix& mode_matrix, const FockBasis& basis);

/// Applies a linear mode transformation to a state.
OpticalState apply_linear(const OpticalState& state, const Matrix& mode_matrix);

/// Multiplies each amplitude by exp(i chi n_a n_b).
OpticalState apply_kerr(const OpticalState& state, double chi, std::size_t mode_a,
                        std::size_t mode_b);
OpticalState apply_hwp(const OpticalState& state, double theta_rad, std::size_t mode_h,
                       std::size_t mode_v);
OpticalState apply_pbs(const OpticalState& state, std::size_t h1, std::size_t v1,
                       std::size_t h2, std::size_t v2);
OpticalState apply_element(const OpticalState& state, const OpticalElement& element);

/// Runs the whole circuit; consecutive linear elements are merged into one
/// transfer matrix.
OpticalState evolve(const OpticalCircuit& circuit, const OpticalState& state);

/// Full many-photon operator of a (possibly nonlinear) circuit on `basis`.
Matrix circuit_operator(const OpticalCircuit& circuit, const FockBasisPtr& basis);

/**
 * Detection condition: an optional exact count per mode (0 meaning a zero
 * detection) plus optional exact totals over groups of modes, which is how
 * coincidence conditions ("one photon per logical wire") are expressed.
 */
class DetectionPattern {
 public:
  explicit DetectionPattern(std::size_t modes) : per_mode_(modes) {}

  DetectionPattern& require(std::size_t mode, unsigned count);
  DetectionPattern& zero(std::size_t mode) { return require(mode, 0); }
  DetectionPattern& require_group(std::vector<std::size_t> group, unsigned total);

  std::size_t modes() const { return per_mode_.size(); }
  bool unconstrained() const;
  bool matches(const Occupation& occ) const;

  const std::vector<std::optional<unsigned>>& per_mode() const { return per_mode_; }
  const std::vector<std::pair<std::vector<std::size_t>, unsigned>>& groups() const {
    return groups_;
  }

 private:
  std::vector<std::optional<unsigned>> per_mode_;
  std::vector<std::pair<std::vector<std::size_t>, unsigned>> groups_;
};

struct PostSelection {
  /// Amplitudes consistent with the pattern; others zeroed.
  OpticalState state;
  double probability = 0.0;
  /// The pattern is orthogonal to the state (probability below 1e-15).
  bool vanished = false;

  OpticalState renormalized() const;
};

PostSelection postselect(const OpticalState& state, const DetectionPattern& pattern);

}  // namespace qts
