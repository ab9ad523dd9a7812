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

#include "qts/optical_element.hpp"

#include <cmath>
#include <stdexcept>

namespace qts {

namespace {

void check_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1], got " +
                                std::to_string(v));
  }
}

RealMatrix splitter_block(double r, DottedSide dotted) {
  const double a = std::sqrt(r);
  const double b = std::sqrt(1.0 - r);
  RealMatrix m(2, 2);
  if (dotted == DottedSide::kSecond) {
    m << a, b, b, -a;
  } else {
    m << -a, b, b, a;
  }
  return m;
}

}  // namespace

RealMatrix OpticalElement::block() const {
  switch (kind) {
    case ElementKind::kBeamSplitter:
    case ElementKind::kAttenuator:
      return splitter_block(value, dotted);
    case ElementKind::kHalfWavePlate: {
      const double c = std::cos(2.0 * value);
      const double s = std::sin(2.0 * value);
      RealMatrix m(2, 2);
      m << c, s, s, -c;
      return m;
    }
    case ElementKind::kPolarizingBeamSplitter: {
      // (h1, v1, h2, v2): H transmitted, V exchanged.
      RealMatrix m = RealMatrix::Zero(4, 4);
      m(0, 0) = 1.0;
      m(2, 2) = 1.0;
      m(3, 1) = 1.0;
      m(1, 3) = 1.0;
      return m;
    }
    case ElementKind::kCrossKerr:
      break;
  }
  throw std::logic_error("cross-Kerr element has no linear mode block");
}

OpticalElement beam_splitter(double reflectivity, std::size_t a, std::size_t b,
                             DottedSide dotted, std::string label) {
  check_unit_interval(reflectivity, "beamsplitter reflectivity");
  if (a == b) throw std::invalid_argument("beamsplitter needs two distinct modes");
  return {ElementKind::kBeamSplitter, reflectivity, {a, b}, dotted, std::move(label)};
}

OpticalElement polarizing_beam_splitter(std::size_t h1, std::size_t v1, std::size_t h2,
                                        std::size_t v2, std::string label) {
  return {ElementKind::kPolarizingBeamSplitter, 0.0, {h1, v1, h2, v2},
          DottedSide::kSecond, std::move(label)};
}

OpticalElement half_wave_plate(double theta_rad, std::size_t h, std::size_t v,
                               std::string label) {
  if (h == v) throw std::invalid_argument("wave plate needs two distinct modes");
  return {ElementKind::kHalfWavePlate, theta_rad, {h, v}, DottedSide::kSecond,
          std::move(label)};
}

OpticalElement cross_kerr(double chi, std::size_t a, std::size_t b, std::string label) {
  if (a == b) throw std::invalid_argument("cross-Kerr needs two distinct modes");
  return {ElementKind::kCrossKerr, chi, {a, b}, DottedSide::kSecond, std::move(label)};
}

OpticalElement attenuator(double transmission, std::size_t mode, std::size_t ancilla,
                          DottedSide dotted, std::string label) {
  check_unit_interval(transmission, "attenuator transmission");
  if (mode == ancilla) throw std::invalid_argument("attenuator ancilla must be its own mode");
  return {ElementKind::kAttenuator, transmission, {mode, ancilla}, dotted, std::move(label)};
}

std::string kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::kBeamSplitter: return "BS";
    case ElementKind::kPolarizingBeamSplitter: return "PBS";
    case ElementKind::kHalfWavePlate: return "HWP";
    case ElementKind::kCrossKerr: return "KERR";
    case ElementKind::kAttenuator: return "ATTEN";
  }
  return "?";
}

}  // namespace qts
