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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qts/gate_matrix.hpp"
#include "qts/optical_circuit.hpp"
#include "qts/permanent.hpp"
#include "test_support.hpp"

using namespace qts;

namespace {

Complex permanent_by_permutations(const Matrix& a) {
  std::vector<int> p(static_cast<std::size_t>(a.rows()));
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0;
  do {
    Complex term = 1;
    for (Eigen::Index i = 0; i < a.rows(); ++i) term *= a(i, p[static_cast<std::size_t>(i)]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

}  // namespace

TEST_CASE("small permanents") {
  Matrix a(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  CHECK(std::abs(permanent(a) - 10.0) < 1e-14);
  CHECK(std::abs(permanent(Matrix::Ones(3, 3)) - 6.0) < 1e-14);
  CHECK(std::abs(permanent(Matrix::Ones(4, 4)) - 24.0) < 1e-13);
  CHECK(std::abs(permanent(Matrix::Identity(5, 5)) - 1.0) < 1e-14);
  CHECK(permanent(Matrix(0, 0)) == Complex(1.0));
}

TEST_CASE("Ryser agrees with the permutation sum") {
  std::mt19937_64 rng(17);
  for (Eigen::Index n = 1; n <= 6; ++n) {
    const Matrix u = testing::random_unitary(n, rng) * Complex(1.3, -0.2);
    CHECK(std::abs(permanent(u) - permanent_by_permutations(u)) < 1e-12);
  }
}

TEST_CASE("repeated modes carry the factorial normalization") {
  Matrix bs(2, 2);
  const double r = std::sqrt(0.5);
  bs << r, r, r, -r;
  CHECK(std::abs(permanent_amplitude(bs, {1, 1}, {2, 0}) - r) < 1e-15);
  CHECK(std::abs(permanent_amplitude(bs, {1, 1}, {1, 1})) < 1e-15);
  CHECK(std::abs(permanent_amplitude(bs, {2, 0}, {2, 0}) - 0.5) < 1e-15);
  CHECK_THROWS(permanent_amplitude(bs, {1, 1}, {1, 0}));
}

TEST_CASE("Fock lift agrees with permanents on random interferometers") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> modes(2, 7), photons(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = static_cast<std::size_t>(modes(rng));
    const auto n = static_cast<unsigned>(photons(rng));
    const Matrix u = testing::random_unitary(static_cast<Eigen::Index>(m), rng);
    const FockBasis b(m, n);
    const Matrix l = lift_to_fock(u, b);
    CHECK(unitarity_residual(l) < 1e-9);
    double worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        worst = std::max(worst, std::abs(l(i, j) - permanent_amplitude(u, b.state(j), b.state(i))));
    CHECK(worst < 1e-9);
  }
}
