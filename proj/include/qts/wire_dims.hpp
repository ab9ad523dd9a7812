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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qts {

using Digits = std::vector<unsigned>;

/**
 * Per-wire dimensions of a mixed-radix register.
 *
 * Wire 0 is the most significant digit of the linear index, so the ket
 * |i,j,k> on dims (2,2,3) lives at index i*6 + j*3 + k.
 */
class WireDims {
 public:
  WireDims() = default;
  explicit WireDims(std::vector<unsigned> dims);
  WireDims(std::initializer_list<unsigned> dims)
      : WireDims(std::vector<unsigned>(dims)) {}

  std::size_t num_wires() const { return dims_.size(); }
  std::size_t total_dim() const { return total_; }
  unsigned operator[](std::size_t wire) const { return dims_.at(wire); }
  const std::vector<unsigned>& dims() const { return dims_; }

  /// Distance in the linear index between adjacent levels of `wire`.
  std::size_t stride(std::size_t wire) const { return strides_.at(wire); }

  std::string to_string() const;

  bool operator==(const WireDims&) const = default;

 private:
  std::vector<unsigned> dims_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

/// Mixed-radix linear index of a ket. Throws std::domain_error naming the
/// offending wire when a digit is out of range.
std::size_t basis_index(std::span<const unsigned> digits, const WireDims& dims);

/// Inverse of basis_index.
Digits basis_digits(std::size_t index, const WireDims& dims);

/// "|1,0,1>" style label.
std::string ket_label(std::span<const unsigned> digits);

}  // namespace qts
