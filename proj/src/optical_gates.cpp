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

#include "qts/optical_gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace qts {

namespace {

constexpr double kPi = std::numbers::pi;

// Mode map shared by the three-qubit polarization gates.
constexpr std::size_t kAH = 0, kAV = 1, kBH = 2, kBV = 3;
constexpr std::size_t kTH = 4, kTV = 5;  // target input/output path
constexpr std::size_t kSH = 6, kSV = 7;  // auxiliary target path

ModeLayout three_qubit_layout(std::size_t modes) {
  return ModeLayout(modes, {{kAH, kAV}, {kBH, kBV}, {kTH, kTV}});
}

DetectionPattern coincidence(const ModeLayout& layout, std::vector<std::size_t> dark) {
  DetectionPattern p(layout.modes());
  for (const auto& g : layout.groups()) p.require_group(g, 1);
  for (auto m : dark) p.zero(m);
  return p;
}

/// Cross-Kerr C-S between two V modes, with Hadamard plates around it when
/// it is used as a CNOT on path s.
void add_kerr_cnot(OpticalCircuit& c, std::size_t control_v, const std::string& label) {
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, label + " plate"));
  c.add(cross_kerr(kPi, control_v, kSV, label));
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, label + " plate"));
}

/// Front half shared by the deterministic and heralded gates: X_A via PBS,
/// CNOT(b, s), C-S(a, s).
OpticalCircuit kerr_front_end(std::size_t modes) {
  OpticalCircuit c(modes);
  c.add(polarizing_beam_splitter(kTH, kTV, kSH, kSV, "PBS (X_A)"));
  add_kerr_cnot(c, kBV, "C-S(b,s)");
  c.add(cross_kerr(kPi, kAV, kSV, "C-S(a,s)"));
  return c;
}

/// Post-selected C-S between control mode pair (c0, c1) and target pair
/// (t0, t1), drawing on fresh vacuum ancillas from `next_ancilla`. Modes in
/// `balance` are attenuated to 1/3 as well.
void add_postselected_cs(OpticalCircuit& c, std::size_t c0, std::size_t c1, std::size_t t0,
                         std::size_t t1, std::vector<std::size_t> balance,
                         std::size_t& next_ancilla) {
  const double third = 1.0 / 3.0;
  c.add(beam_splitter(third, c1, t1, DottedSide::kSecond, "1/3 coupler"));
  c.add(attenuator(third, c0, next_ancilla++, DottedSide::kSecond, "1/3 attenuator"));
  c.add(attenuator(third, t0, next_ancilla++, DottedSide::kSecond, "1/3 attenuator"));
  for (auto m : balance) {
    c.add(attenuator(third, m, next_ancilla++, DottedSide::kSecond, "balancing attenuator"));
  }
  c.add(half_wave_plate(0.0, t0, t1, "sign plate"));
}

}  // namespace

GateRealization characterize(std::string name, OpticalCircuit circuit, ModeLayout input_layout,
                             ModeLayout output_layout, DetectionPattern herald,
                             Rational charged_probability, std::string resources) {
  if (circuit.modes() != input_layout.modes() || circuit.modes() != output_layout.modes()) {
    throw std::invalid_argument("characterize: layouts do not match the circuit");
  }
  const WireDims in_dims = input_layout.logical_dims();
  const WireDims out_dims = output_layout.logical_dims();
  auto basis = std::make_shared<const FockBasis>(circuit.modes(),
                                                 static_cast<unsigned>(input_layout.num_wires()));

  GateRealization g{std::move(name), circuit, input_layout, output_layout, herald,
                    charged_probability, std::move(resources), {}, {}, 0.0, {}, {}, 0.0, 0.0};
  g.logical_transfer = Matrix::Zero(static_cast<Eigen::Index>(out_dims.total_dim()),
                                    static_cast<Eigen::Index>(in_dims.total_dim()));
  for (std::size_t i = 0; i < in_dims.total_dim(); ++i) {
    const Digits d = basis_digits(i, in_dims);
    const OpticalState out = evolve(circuit, encode_dual_rail(d, input_layout, basis));
    const PostSelection ps = postselect(out, herald);
    g.logical_transfer.col(static_cast<Eigen::Index>(i)) =
        decode_dual_rail(ps.state, output_layout).amplitudes;
    g.success_by_input.push_back(ps.probability * charged_probability.to_double());
  }

  const auto [lo, hi] = std::minmax_element(g.success_by_input.begin(), g.success_by_input.end());
  g.success_spread = *hi - *lo;
  g.success_probability = std::accumulate(g.success_by_input.begin(), g.success_by_input.end(), 0.0) /
                          static_cast<double>(g.success_by_input.size());
  g.exact_success = Rational::approximate(g.success_probability, 100000, 1e-10);

  if (g.logical_transfer.rows() == g.logical_transfer.cols()) {
    const Matrix& t = g.logical_transfer;
    const Complex sum = t.diagonal().sum();
    const Complex ref = std::abs(sum) > 0 ? sum / std::abs(sum) : Complex{1.0};
    for (Eigen::Index k = 0; k < t.rows(); ++k) {
      if ((t(k, k) * std::conj(ref)).real() < 0) g.flipped_components.push_back(static_cast<std::size_t>(k));
      for (Eigen::Index j = 0; j < t.cols(); ++j) {
        if (j != k) g.off_diagonal = std::max(g.off_diagonal, std::abs(t(k, j)));
      }
    }
  }
  return g;
}

GateRealization kerr_cs_gate(double chi) {
  OpticalCircuit c(4);
  c.add(cross_kerr(chi, kAV, kBV, "cross-Kerr"));
  ModeLayout layout(4, {{kAH, kAV}, {kBH, kBV}});
  return characterize("cross-Kerr C-S", c, layout, layout, coincidence(layout, {}), Rational(1),
                      "1 Kerr interaction");
}

GateRealization deterministic_ts_gate() {
  OpticalCircuit c = kerr_front_end(8);
  add_kerr_cnot(c, kBV, "C-S(b,s)");
  c.add(polarizing_beam_splitter(kTH, kTV, kSH, kSV, "PBS (X_A)"));
  const ModeLayout layout = three_qubit_layout(8);
  return characterize("deterministic cross-Kerr T-S", c, layout, layout,
                      coincidence(layout, {kSH, kSV}), Rational(1), "3 Kerr interactions");
}

namespace {

OpticalCircuit heralded_circuit() {
  OpticalCircuit c = kerr_front_end(8);
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, "filter plate s"));
  c.add(half_wave_plate(kHadamardPlateAngle, kTH, kTV, "filter plate t"));
  c.add(polarizing_beam_splitter(kTH, kTV, kSH, kSV, "filter PBS"));
  return c;
}

}  // namespace

GateRealization heralded_ts_gate(Rational cs_success) {
  const ModeLayout layout = three_qubit_layout(8);
  return characterize("heralded qudit T-S", heralded_circuit(), layout, layout,
                      coincidence(layout, {kSH, kSV}), cs_success.pow(2), "2 entangled pairs");
}

ModeLayout heralded_ququit_layout() {
  return ModeLayout(8, {{kAH, kAV}, {kBH, kBV}, {kSH, kSV, kTH, kTV}});
}

HeraldedTrace heralded_ts_trace(const PureState& logical_input) {
  const ModeLayout layout = three_qubit_layout(8);
  auto basis = std::make_shared<const FockBasis>(8, 3);
  const OpticalCircuit full = heralded_circuit();
  const auto& els = full.elements();

  // Element index ranges: [0, 5) front end, [5, 7) plates, [7] PBS.
  OpticalCircuit front(8), plates(8), recombine(8);
  for (std::size_t i = 0; i < els.size(); ++i) {
    (i < 5 ? front : i < 7 ? plates : recombine).add(els[i]);
  }
  OpticalState s = evolve(front, encode_state(logical_input, layout, basis));
  OpticalState p = evolve(plates, s);
  OpticalState r = evolve(recombine, p);
  return HeraldedTrace{s, p, postselect(r, coincidence(layout, {kSH, kSV}))};
}

GateRealization postselected_cs_gate() {
  OpticalCircuit c(6);
  std::size_t ancilla = 4;
  add_postselected_cs(c, 0, 1, 2, 3, {}, ancilla);
  ModeLayout layout(6, {{0, 1}, {2, 3}});
  return characterize("post-selected C-S", c, layout, layout, coincidence(layout, {4, 5}),
                      Rational(1), "2 photons");
}

GateRealization naive_postselected_ts_gate() {
  constexpr std::size_t kModes = 14;
  OpticalCircuit c(kModes);
  std::size_t ancilla = 8;
  c.add(polarizing_beam_splitter(kTH, kTV, kSH, kSV, "PBS (X_A)"));
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, "CNOT plate"));
  add_postselected_cs(c, kBH, kBV, kSH, kSV, {kTH}, ancilla);
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, "CNOT plate"));
  add_postselected_cs(c, kAH, kAV, kSH, kSV, {kTH}, ancilla);
  c.add(half_wave_plate(kHadamardPlateAngle, kSH, kSV, "filter plate s"));
  c.add(half_wave_plate(kHadamardPlateAngle, kTH, kTV, "filter plate t"));
  c.add(polarizing_beam_splitter(kTH, kTV, kSH, kSV, "filter PBS"));

  const ModeLayout layout = three_qubit_layout(kModes);
  std::vector<std::size_t> dark{kSH, kSV};
  for (std::size_t m = 8; m < kModes; ++m) dark.push_back(m);
  return characterize("chained post-selected C-S T-S", c, layout, layout,
                      coincidence(layout, dark), Rational(1), "3 photons");
}

}  // namespace qts
