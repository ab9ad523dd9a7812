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

#include "qts/circuit_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace qts {

namespace {

std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::optional<unsigned long> to_unsigned(const std::string& tok) {
  unsigned long v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

std::optional<double> to_double(const std::string& tok) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

Circuit parse_circuit(std::istream& in, const GateResolver& resolve) {
  std::optional<Circuit> circ;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;

    std::string head;
    std::string rest;
    std::vector<double> params;
    const auto open = line.find('(');
    const auto space = line.find_first_of(" \t");
    if (open != std::string::npos && (space == std::string::npos || open < space)) {
      const auto close = line.find(')', open);
      if (close == std::string::npos) throw ParseError(lineno, "unclosed '('");
      head = line.substr(0, open);
      std::stringstream plist(line.substr(open + 1, close - open - 1));
      std::string tok;
      while (std::getline(plist, tok, ',')) {
        auto v = to_double(strip(tok));
        if (!v) throw ParseError(lineno, "bad parameter '" + strip(tok) + "'");
        params.push_back(*v);
      }
      rest = line.substr(close + 1);
    } else {
      head = line.substr(0, space);
      rest = space == std::string::npos ? "" : line.substr(space);
    }
    std::transform(head.begin(), head.end(), head.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });

    std::vector<unsigned long> numbers;
    std::istringstream ws(rest);
    std::string tok;
    while (ws >> tok) {
      auto v = to_unsigned(tok);
      if (!v) throw ParseError(lineno, "expected an unsigned integer, got '" + tok + "'");
      numbers.push_back(*v);
    }

    if (head == "DIMS") {
      if (circ) throw ParseError(lineno, "duplicate 'dims' line");
      if (numbers.empty()) throw ParseError(lineno, "'dims' needs at least one wire");
      std::vector<unsigned> dims(numbers.begin(), numbers.end());
      try {
        circ.emplace(WireDims(dims));
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
      continue;
    }
    if (!circ) throw ParseError(lineno, "'dims' must precede the first gate");
    if (numbers.empty()) throw ParseError(lineno, head + ": no target wires");

    std::vector<std::size_t> wires(numbers.begin(), numbers.end());
    std::vector<unsigned> wire_dims;
    for (auto w : wires) {
      if (w >= circ->dims().num_wires()) {
        throw ParseError(lineno, head + ": wire " + std::to_string(w) +
                                     " outside register " + circ->dims().to_string());
      }
      wire_dims.push_back(circ->dims()[w]);
    }
    try {
      GateMatrix gate = resolve(head, params, wire_dims);
      circ->add(head, params, wires, std::move(gate));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!circ) throw ParseError(lineno, "missing 'dims' line");
  return *circ;
}

Circuit parse_circuit(const std::string& text, const GateResolver& resolve) {
  std::istringstream in(text);
  return parse_circuit(in, resolve);
}

Circuit load_circuit(const std::string& path, const GateResolver& resolve) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file " + path);
  return parse_circuit(in, resolve);
}

std::string format_circuit(const Circuit& circ) {
  std::ostringstream os;
  os << "dims";
  for (unsigned d : circ.dims().dims()) os << ' ' << d;
  os << '\n';
  os.precision(17);
  for (const auto& step : circ.steps()) {
    os << step.name;
    if (!step.params.empty()) {
      os << '(';
      for (std::size_t i = 0; i < step.params.size(); ++i) {
        if (i) os << ',';
        os << step.params[i];
      }
      os << ')';
    }
    for (auto w : step.wires) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

}  // namespace qts
