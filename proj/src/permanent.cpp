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

#include "qts/permanent.hpp"

#include <cmath>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qts {

Complex permanent(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("permanent: matrix is not square");
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return 1.0;

  // perm(A) = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} a_ij
  std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{});
  Complex total{};
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t next = k ^ (k >> 1);
    const std::uint64_t changed = next ^ gray;
    const int col = std::countr_zero(changed);
    const double sign = (next & changed) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) row_sums[static_cast<std::size_t>(i)] += sign * a(i, col);
    gray = next;
    Complex prod = 1.0;
    for (const auto& s : row_sums) prod *= s;
    const int size = std::popcount(gray);
    total += ((size % 2) ? -1.0 : 1.0) * prod;
  }
  return (n % 2 ? -1.0 : 1.0) * total;
}

Complex permanent_amplitude(const Matrix& mode_matrix, const Occupation& in,
                            const Occupation& out) {
  const auto m = static_cast<std::size_t>(mode_matrix.rows());
  if (in.size() != m || out.size() != m) {
    throw std::invalid_argument("permanent_amplitude: occupation length does not match modes");
  }
  const unsigned n_in = std::accumulate(in.begin(), in.end(), 0u);
  const unsigned n_out = std::accumulate(out.begin(), out.end(), 0u);
  if (n_in != n_out) {
    throw std::invalid_argument("permanent_amplitude: photon number mismatch (" +
                                std::to_string(n_in) + " in, " + std::to_string(n_out) + " out)");
  }
  std::vector<Eigen::Index> rows;
  std::vector<Eigen::Index> cols;
  double norm = 1.0;
  for (std::size_t j = 0; j < m; ++j) {
    for (unsigned k = 0; k < out[j]; ++k) {
      rows.push_back(static_cast<Eigen::Index>(j));
      norm *= (k + 1);
    }
    for (unsigned k = 0; k < in[j]; ++k) {
      cols.push_back(static_cast<Eigen::Index>(j));
      norm *= (k + 1);
    }
  }
  Matrix sub(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      sub(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = mode_matrix(rows[r], cols[c]);
    }
  }
  return permanent(sub) / std::sqrt(norm);
}

}  // namespace qts
