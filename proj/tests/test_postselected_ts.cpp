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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "qts/postselected_ts.hpp"

using namespace qts;

namespace {

const std::string kParams = std::string(QTS_DATA_DIR) + "/postselected_ts_params.json";

PtsParameters hand_point() {
  PtsParameters p = PtsParameters::initial();
  p.at("split").reflectivity = 0.75;
  p.at("c1_top").reflectivity = 1.0 / 3;
  p.at("lower_arm").reflectivity = 1.0;
  p.at("middle").reflectivity = 0.5;
  p.at("c2_bottom").reflectivity = 1.0 / 3;
  p.at("upper_arm").reflectivity = 1.0;
  p.at("combine").reflectivity = 0.25;
  p.at("t_bottom").reflectivity = 0.125;
  return p;
}

// The first five elements: split, coupler1, the two attenuators, middle.
OpticalCircuit first_interferometer(const PtsParameters& p) {
  const OpticalCircuit full = pts_circuit(p);
  OpticalCircuit c(full.modes());
  for (std::size_t i = 0; i < 5; ++i) c.add(full.elements()[i]);
  return c;
}

}  // namespace

TEST_CASE("topology: seven principal modes, two 1/3 couplers") {
  const PtsParameters p = PtsParameters::initial();
  CHECK(p.splitters.size() == 10);
  CHECK(p.at("coupler1").fixed);
  CHECK(p.at("coupler2").fixed);
  CHECK(p.at("coupler1").reflectivity == Catch::Approx(1.0 / 3));
  const OpticalCircuit c = pts_circuit(p);
  CHECK(c.modes() == kPtsModes);
  CHECK(c.is_linear());
  CHECK(pts_layout().logical_dims() == WireDims{2, 2, 2});
  CHECK(pts_coincidence().matches({1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0}));
  CHECK_FALSE(pts_coincidence().matches({1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("first interferometer sends a lone target photon to the lower arm") {
  const OpticalCircuit c = first_interferometer(hand_point());
  const Matrix u = single_photon_transfer(c);
  CHECK(std::abs(u(2, 2)) < 1e-15);
  CHECK(u(3, 2).real() < 0);
  CHECK(std::abs(u(3, 2).imag()) < 1e-15);
}

TEST_CASE("an occupied C1 bottom mode steers the target photon to the upper arm") {
  const OpticalCircuit c = first_interferometer(hand_point());
  auto b = std::make_shared<const FockBasis>(kPtsModes, 2);
  Occupation in(kPtsModes, 0);
  in[1] = in[2] = 1;
  const OpticalState out = evolve(c, OpticalState::fock(b, in));
  DetectionPattern c1(kPtsModes);
  c1.require(1, 1);
  for (std::size_t m = 7; m < kPtsModes; ++m) c1.zero(m);
  const PostSelection ps = postselect(out, c1);
  Occupation upper(kPtsModes, 0), lower(kPtsModes, 0);
  upper[1] = upper[2] = 1;
  lower[1] = lower[3] = 1;
  CHECK(std::abs(ps.state.amplitude(lower)) < 1e-15);
  CHECK(ps.state.amplitude(upper).real() > 0);
}

TEST_CASE("the hand-derived point realizes the gate at 1/72") {
  const PtsFit f = pts_fit(pts_coincidence_transfer(hand_point()));
  CHECK(std::abs(f.probability - 1.0 / 72) < 1e-14);
  CHECK(f.magnitude_spread < 1e-14);
  CHECK(f.off_diagonal < 1e-14);
}

TEST_CASE("committed parameters re-verify without solving") {
  const PtsParameters p = load_pts_parameters(kParams);
  const Matrix t = pts_coincidence_transfer(p);
  const PtsFit f = pts_fit(t);
  CHECK(std::abs(f.probability - 1.0 / 72) < 1e-9);
  CHECK(f.magnitude_spread < 1e-9);
  CHECK(f.off_diagonal < 1e-9);
  CHECK(f.max_imag < 1e-15);
  for (Eigen::Index k = 0; k < 8; ++k) CHECK((t(k, k).real() < 0) == (k == 0));

  const GateRealization g = pts_gate(p);
  CHECK(max_abs(g.logical_transfer - t) < 1e-9);
  CHECK(g.flipped_components == std::vector<std::size_t>{0});
  CHECK(g.success_spread < 1e-9);
}

TEST_CASE("parameters round trip through JSON") {
  const PtsParameters p = load_pts_parameters(kParams);
  const PtsParameters back = pts_parameters_from_json(pts_parameters_to_json(p));
  for (std::size_t i = 0; i < p.splitters.size(); ++i) {
    CHECK(back.splitters[i].name == p.splitters[i].name);
    CHECK(back.splitters[i].reflectivity == p.splitters[i].reflectivity);
    CHECK(back.splitters[i].dotted == p.splitters[i].dotted);
  }
}

TEST_CASE("malformed parameter files are rejected") {
  CHECK_THROWS_AS(pts_parameters_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(pts_parameters_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(pts_parameters_from_json(R"({"splitters": []})"), std::invalid_argument);
  std::string text = pts_parameters_to_json(PtsParameters::initial());
  const auto pos = text.find("0.5");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS_AS(pts_parameters_from_json(text.substr(0, pos) + "1.5" + text.substr(pos + 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(pts_parameters_from_json(
                      R"({"splitters": [{"name": "mirror", "reflectivity": 1}]})"),
                  std::invalid_argument);
  CHECK_THROWS(load_pts_parameters("/nonexistent/params.json"));
  PtsParameters p = PtsParameters::initial();
  p.splitters.pop_back();
  CHECK_THROWS(pts_circuit(p));
}

TEST_CASE("fit of an exact pattern") {
  Matrix t = Matrix::Identity(8, 8) * 0.5;
  t(0, 0) = -0.5;
  const PtsFit f = pts_fit(t);
  CHECK(f.lambda == Catch::Approx(0.5));
  CHECK(f.probability == Catch::Approx(0.25));
  CHECK(f.magnitude_spread == 0.0);
  t(2, 2) = -0.5;
  CHECK(pts_fit(t).magnitude_spread > 0.1);
}

TEST_CASE("solver reaches 1/72 from random starts", "[solver]") {
  const PtsSolveResult r = solve_pts_reflectivities();
  INFO(r.message);
  CHECK(r.converged);
  CHECK(std::abs(r.fit.probability - 1.0 / 72) < 1e-6);
  CHECK(r.fit.magnitude_spread < 1e-8);
  CHECK(r.fit.off_diagonal < 1e-8);
  const Matrix t = pts_coincidence_transfer(r.params);
  for (Eigen::Index k = 0; k < 8; ++k) CHECK((t(k, k).real() < 0) == (k == 0));
  for (const auto& s : r.params.splitters) {
    CHECK(s.reflectivity >= 0.0);
    CHECK(s.reflectivity <= 1.0);
  }
}

TEST_CASE("solver is deterministic for a fixed seed", "[solver]") {
  PtsSolveOptions opt;
  opt.seed = 5;
  opt.starts = 3;
  opt.enumerate_orientations = false;
  const PtsSolveResult a = solve_pts_reflectivities(opt);
  const PtsSolveResult b = solve_pts_reflectivities(opt);
  CHECK(pts_parameters_to_json(a.params, &a) == pts_parameters_to_json(b.params, &b));
}
