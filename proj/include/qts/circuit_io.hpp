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

#include <functional>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>

#include "qts/circuit.hpp"

namespace qts {

/**
 * Text format for qudit circuits, one statement per line:
 *
 *   # comment
 *   dims 2 2 3
 *   XA 2
 *   CNOT 1 2
 *   LEVELSWAP(1,3) 3
 *
 * The `dims` line comes first. Every later line is a gate name, an optional
 * parenthesised comma-separated parameter list, then the target wires.
 * Names are case-insensitive; `#` starts a comment anywhere on a line.
 */
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Builds the gate for an upper-case name, its parameters and target dims.
using GateResolver = std::function<GateMatrix(
    const std::string& name, std::span<const double> params,
    std::span<const unsigned> wire_dims)>;

Circuit parse_circuit(std::istream& in, const GateResolver& resolve);
Circuit parse_circuit(const std::string& text, const GateResolver& resolve);
Circuit load_circuit(const std::string& path, const GateResolver& resolve);

std::string format_circuit(const Circuit& circ);

}  // namespace qts
