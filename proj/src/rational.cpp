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

#include "qts/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qts {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::pow(unsigned k) const {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::optional<Rational> Rational::approximate(double x, std::int64_t max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h/k of the continued fraction of x.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_real = std::floor(rem);
    if (std::abs(a_real) > 1e15) break;
    const auto a = static_cast<std::int64_t>(a_real);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      return Rational(h1, k1);
    }
    const double frac = rem - a_real;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

}  // namespace qts
