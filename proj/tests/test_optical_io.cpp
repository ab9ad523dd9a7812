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
#include <numbers>

#include "qts/optical_io.hpp"

using namespace qts;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_optical(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("optical description parses elements and detections") {
  const OpticalSetup s = parse_optical(
      "# cross-Kerr C-S\n"
      "modes 6\n"
      "photons 2\n"
      "input 1 0 0 1 0 0\n"
      "BS 1/3 1 3 dotted=first\n"
      "PBS 0 1 2 3\n"
      "HWP 22.5 2 3\n"
      "KERR pi 1 3\n"
      "KERR pi/2 1 3\n"
      "ATTEN 0.25 0 4\n"
      "detect 4=0 5=0 0+1=1\n");
  CHECK(s.circuit.modes() == 6);
  CHECK(s.photons == 2);
  CHECK(s.input == Occupation{1, 0, 0, 1, 0, 0});
  REQUIRE(s.circuit.elements().size() == 6);
  const auto& e = s.circuit.elements();
  CHECK(e[0].kind == ElementKind::kBeamSplitter);
  CHECK(e[0].value == Catch::Approx(1.0 / 3));
  CHECK(e[0].dotted == DottedSide::kFirst);
  CHECK(e[2].value == Catch::Approx(kHadamardPlateAngle));
  CHECK(e[3].value == Catch::Approx(std::numbers::pi));
  CHECK(e[4].value == Catch::Approx(std::numbers::pi / 2));
  CHECK(e[5].kind == ElementKind::kAttenuator);
  CHECK(s.pattern.matches({1, 0, 0, 1, 0, 0}));
  CHECK_FALSE(s.pattern.matches({1, 0, 0, 0, 1, 0}));
  CHECK_FALSE(s.pattern.matches({0, 0, 1, 1, 0, 0}));
}

TEST_CASE("format and parse round trip") {
  const OpticalSetup s = parse_optical(
      "modes 4\nphotons 2\nBS 0.3 0 1 dotted=first\nHWP 10 2 3\nKERR 1.5 1 2\n"
      "detect 0=1 2+3=1\n");
  const OpticalSetup back = parse_optical(format_optical(s));
  REQUIRE(back.circuit.elements().size() == s.circuit.elements().size());
  for (std::size_t i = 0; i < s.circuit.elements().size(); ++i) {
    const auto& a = s.circuit.elements()[i];
    const auto& b = back.circuit.elements()[i];
    CHECK(a.kind == b.kind);
    CHECK(std::abs(a.value - b.value) < 1e-14);
    CHECK(a.modes == b.modes);
    CHECK(a.dotted == b.dotted);
  }
  CHECK(back.pattern.matches({1, 0, 1, 0}));
  CHECK_FALSE(back.pattern.matches({1, 0, 0, 0}));
}

TEST_CASE("optical parse errors name the line") {
  CHECK(error_line("BS 0.5 0 1\n") == 1);
  CHECK(error_line("modes 2\nphotons 1\nBS 1.5 0 1\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\nBS 0.5 0\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\nBS 0.5 0 2\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\n\nLASER 1\n") == 4);
  CHECK(error_line("modes 2\nphotons 1\ninput 1 1\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\nBS 0.5 0 1 dotted=left\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\ndetect 0\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\nHWP x 0 1\n") == 3);
  CHECK(error_line("modes 2\nphotons 1\nBS 0.5 0 1\nmodes 3\n") == 4);
  CHECK_THROWS(load_optical("/nonexistent/setup.opt"));
}
