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

#include <Eigen/QR>
#include <random>

#include "qts/types.hpp"

namespace qts::testing {

// Haar-ish random unitary: QR of a complex Gaussian matrix with the phases
// of R's diagonal pushed into Q.
inline Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return q;
}

inline Vector random_state(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

}  // namespace qts::testing
