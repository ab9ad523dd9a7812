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

#include "qts/optical_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

namespace qts {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& tok, std::size_t line) {
  if (tok == "pi") return std::numbers::pi;
  if (tok.rfind("pi/", 0) == 0) return std::numbers::pi / parse_number(tok.substr(3), line);
  if (const auto slash = tok.find('/'); slash != std::string::npos && slash > 0) {
    return parse_number(tok.substr(0, slash), line) / parse_number(tok.substr(slash + 1), line);
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used == tok.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParseError(line, "bad number '" + tok + "'");
}

std::size_t parse_index(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) throw ParseError(line, "bad index '" + tok + "'");
  return v;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

OpticalSetup parse_optical(std::istream& in) {
  std::optional<std::size_t> modes;
  std::optional<unsigned> photons;
  OpticalSetup setup;
  bool started = false;
  std::string raw;
  std::size_t lineno = 0;

  auto ensure_started = [&](std::size_t line) {
    if (started) return;
    if (!modes || !photons) throw ParseError(line, "'modes' and 'photons' must come first");
    setup.circuit = OpticalCircuit(*modes);
    setup.photons = *photons;
    setup.pattern = DetectionPattern(*modes);
    started = true;
  };

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    try {
      if (head == "modes" || head == "photons") {
        if (started) throw ParseError(lineno, "'" + head + "' after the first element");
        if (toks.size() != 1) throw ParseError(lineno, "'" + head + "' takes one value");
        const std::size_t v = parse_index(toks[0], lineno);
        if (head == "modes") {
          if (v == 0) throw ParseError(lineno, "need at least one mode");
          modes = v;
        } else {
          photons = static_cast<unsigned>(v);
        }
        continue;
      }
      ensure_started(lineno);

      DottedSide dotted = DottedSide::kSecond;
      if (!toks.empty() && toks.back().rfind("dotted=", 0) == 0) {
        const std::string side = toks.back().substr(7);
        if (side == "first") {
          dotted = DottedSide::kFirst;
        } else if (side != "second") {
          throw ParseError(lineno, "dotted= must be 'first' or 'second'");
        }
        toks.pop_back();
      }
      auto need = [&](std::size_t n) {
        if (toks.size() != n) {
          throw ParseError(lineno, head + " expects " + std::to_string(n) + " fields, got " +
                                       std::to_string(toks.size()));
        }
      };

      if (head == "input") {
        need(*modes);
        Occupation occ;
        unsigned total = 0;
        for (const auto& t : toks) {
          occ.push_back(static_cast<unsigned>(parse_index(t, lineno)));
          total += occ.back();
        }
        if (total != *photons) throw ParseError(lineno, "input photon count differs from 'photons'");
        setup.input = occ;
      } else if (head == "BS") {
        need(3);
        setup.circuit.add(beam_splitter(parse_number(toks[0], lineno), parse_index(toks[1], lineno),
                                        parse_index(toks[2], lineno), dotted));
      } else if (head == "ATTEN") {
        need(3);
        setup.circuit.add(attenuator(parse_number(toks[0], lineno), parse_index(toks[1], lineno),
                                     parse_index(toks[2], lineno), dotted));
      } else if (head == "PBS") {
        need(4);
        setup.circuit.add(polarizing_beam_splitter(
            parse_index(toks[0], lineno), parse_index(toks[1], lineno),
            parse_index(toks[2], lineno), parse_index(toks[3], lineno)));
      } else if (head == "HWP") {
        need(3);
        const double theta = parse_number(toks[0], lineno) * std::numbers::pi / 180.0;
        setup.circuit.add(half_wave_plate(theta, parse_index(toks[1], lineno),
                                          parse_index(toks[2], lineno)));
      } else if (head == "KERR") {
        need(3);
        setup.circuit.add(cross_kerr(parse_number(toks[0], lineno), parse_index(toks[1], lineno),
                                     parse_index(toks[2], lineno)));
      } else if (head == "detect") {
        if (toks.empty()) throw ParseError(lineno, "detect needs at least one condition");
        for (const auto& cond : toks) {
          const auto eq = cond.find('=');
          if (eq == std::string::npos) throw ParseError(lineno, "condition '" + cond + "' lacks '='");
          const auto count = static_cast<unsigned>(parse_index(cond.substr(eq + 1), lineno));
          const std::string lhs = cond.substr(0, eq);
          if (lhs.find('+') == std::string::npos) {
            setup.pattern.require(parse_index(lhs, lineno), count);
          } else {
            std::vector<std::size_t> group;
            std::stringstream gs(lhs);
            for (std::string m; std::getline(gs, m, '+');) group.push_back(parse_index(m, lineno));
            setup.pattern.require_group(group, count);
          }
        }
      } else {
        throw ParseError(lineno, "unknown statement '" + head + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  ensure_started(lineno);
  return setup;
}

OpticalSetup parse_optical(const std::string& text) {
  std::istringstream in(text);
  return parse_optical(in);
}

OpticalSetup load_optical(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open optical setup " + path);
  return parse_optical(in);
}

std::string format_optical(const OpticalSetup& setup) {
  std::ostringstream os;
  os << "modes " << setup.circuit.modes() << "\nphotons " << setup.photons << '\n';
  if (setup.input) {
    os << "input";
    for (unsigned n : *setup.input) os << ' ' << n;
    os << '\n';
  }
  for (const auto& e : setup.circuit.elements()) {
    os << kind_name(e.kind);
    switch (e.kind) {
      case ElementKind::kHalfWavePlate:
        os << ' ' << format_double(e.value * 180.0 / std::numbers::pi);
        break;
      case ElementKind::kPolarizingBeamSplitter:
        break;
      default:
        os << ' ' << format_double(e.value);
    }
    for (auto m : e.modes) os << ' ' << m;
    if ((e.kind == ElementKind::kBeamSplitter || e.kind == ElementKind::kAttenuator) &&
        e.dotted == DottedSide::kFirst) {
      os << " dotted=first";
    }
    os << '\n';
  }
  bool any = false;
  for (std::size_t m = 0; m < setup.pattern.per_mode().size(); ++m) {
    if (const auto& c = setup.pattern.per_mode()[m]) {
      os << (any ? " " : "detect ") << m << '=' << *c;
      any = true;
    }
  }
  for (const auto& [group, total] : setup.pattern.groups()) {
    os << (any ? " " : "detect ");
    for (std::size_t i = 0; i < group.size(); ++i) os << (i ? "+" : "") << group[i];
    os << '=' << total;
    any = true;
  }
  if (any) os << '\n';
  return os.str();
}

}  // namespace qts
