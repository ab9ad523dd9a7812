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

#include <cstdint>
#include <optional>
#include <string>

namespace qts {

/// Exact fraction for success-probability bookkeeping. Always reduced with a
/// positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  Rational operator*(const Rational& o) const;
  Rational pow(unsigned k) const;
  bool operator==(const Rational&) const = default;

  /// Best continued-fraction approximation with denominator <= max_den, if
  /// it lies within `tol` of x.
  static std::optional<Rational> approximate(double x, std::int64_t max_den = 100000,
                                             double tol = 1e-9);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace qts
