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

#include "qts/wire_dims.hpp"

#include <sstream>
#include <stdexcept>

namespace qts {

WireDims::WireDims(std::vector<unsigned> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw std::invalid_argument("WireDims: no wires");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t w = dims_.size(); w-- > 0;) {
    if (dims_[w] < 2) {
      throw std::invalid_argument(
          "WireDims: wire " + std::to_string(w) + " has dimension " +
          std::to_string(dims_[w]) + " (< 2)");
    }
    strides_[w] = total_;
    total_ *= dims_[w];
  }
}

std::string WireDims::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t w = 0; w < dims_.size(); ++w) {
    if (w) os << ',';
    os << dims_[w];
  }
  os << ')';
  return os.str();
}

std::size_t basis_index(std::span<const unsigned> digits, const WireDims& dims) {
  if (digits.size() != dims.num_wires()) {
    throw std::invalid_argument(
        "basis_index: expected " + std::to_string(dims.num_wires()) +
        " digits, got " + std::to_string(digits.size()));
  }
  std::size_t index = 0;
  for (std::size_t w = 0; w < digits.size(); ++w) {
    if (digits[w] >= dims[w]) {
      throw std::domain_error(
          "basis_index: level " + std::to_string(digits[w]) + " on wire " +
          std::to_string(w) + " exceeds dimension " + std::to_string(dims[w]));
    }
    index += digits[w] * dims.stride(w);
  }
  return index;
}

Digits basis_digits(std::size_t index, const WireDims& dims) {
  if (index >= dims.total_dim()) {
    throw std::domain_error(
        "basis_digits: index " + std::to_string(index) + " outside register " +
        dims.to_string());
  }
  Digits digits(dims.num_wires());
  for (std::size_t w = dims.num_wires(); w-- > 0;) {
    digits[w] = static_cast<unsigned>(index % dims[w]);
    index /= dims[w];
  }
  return digits;
}

std::string ket_label(std::span<const unsigned> digits) {
  std::string s = "|";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  return s + ">";
}

}  // namespace qts
