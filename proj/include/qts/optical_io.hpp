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

#include <istream>
#include <optional>
#include <string>

#include "qts/circuit_io.hpp"
#include "qts/optical_circuit.hpp"

namespace qts {

/**
 * Line-oriented optical experiment description:
 *
 *   modes 8
 *   photons 3
 *   input 1 0 1 0 0 0 1 0      # optional starting occupation
 *   BS 0.3333333333 1 3 dotted=first
 *   PBS 4 5 6 7
 *   HWP 22.5 4 5               # angle in degrees
 *   KERR pi 1 5
 *   ATTEN 0.3333333333 0 8     # kept fraction, data mode, ancilla
 *   detect 4=0 5=0             # exact per-mode counts
 *   detect 0+1=1 2+3=1         # exact totals over mode groups
 *
 * `modes` and `photons` come before any element. Numeric parameters accept
 * `pi`, `pi/k` and fractions like `1/3`. Errors raise ParseError with the line number.
 */
struct OpticalSetup {
  OpticalCircuit circuit{1};
  unsigned photons = 0;
  std::optional<Occupation> input;
  DetectionPattern pattern{1};
};

OpticalSetup parse_optical(std::istream& in);
OpticalSetup parse_optical(const std::string& text);
OpticalSetup load_optical(const std::string& path);
std::string format_optical(const OpticalSetup& setup);

}  // namespace qts
