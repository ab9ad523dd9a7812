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

#include <cmath>
#include <random>

#include "qts/circuit.hpp"
#include "qts/qudit_gates.hpp"
#include "test_support.hpp"

using namespace qts;

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return k;
}

Matrix eye(Eigen::Index n) { return Matrix::Identity(n, n); }

bool is_permutation(const Matrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - 1.0) < 1e-15) ++ones;
      else if (std::abs(m(i, j)) > 1e-15) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("level swaps are permutation involutions") {
  for (unsigned d = 3; d <= 6; ++d) {
    const Matrix xa = gate_xa(d).matrix();
    CHECK(is_permutation(xa));
    CHECK(max_abs(xa * xa - eye(d)) == 0.0);
    CHECK(xa(2, 0) == Complex(1.0));
    CHECK(xa(1, 1) == Complex(1.0));
  }
  const Matrix xb = gate_xb(4).matrix();
  CHECK(xb(3, 1) == Complex(1.0));
  CHECK(xb(0, 0) == Complex(1.0));
  CHECK(max_abs(gate_level_swap(2, 4, 5).matrix() * gate_level_swap(4, 2, 5).matrix() - eye(5)) == 0.0);
  CHECK_THROWS(gate_xa(2));
  CHECK_THROWS(gate_xb(3));
  CHECK_THROWS(gate_level_swap(0, 3, 3));
}

TEST_CASE("qutrit Hadamard leaves level 2 alone") {
  const Matrix h = gate_hadamard(3).matrix();
  CHECK(std::abs(h(0, 1) - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(h(1, 1) + std::sqrt(0.5)) < 1e-15);
  CHECK(h(2, 2) == Complex(1.0));
  CHECK(max_abs(h * h - eye(3)) < 1e-15);
}

TEST_CASE("controlled gates act on target levels 0 and 1 only") {
  const Matrix cs = gate_cs(2, 3).matrix();
  for (Eigen::Index i = 0; i < 6; ++i) CHECK(cs(i, i) == Complex(i == 4 ? -1.0 : 1.0));
  CHECK(max_abs(cs - Matrix(cs.diagonal().asDiagonal())) == 0.0);

  const Matrix cx = gate_cnot(2, 3).matrix();
  CHECK(is_permutation(cx));
  // |1,0> <-> |1,1>, everything else fixed
  CHECK(cx(4, 3) == Complex(1.0));
  CHECK(cx(3, 4) == Complex(1.0));
  CHECK(cx(5, 5) == Complex(1.0));
  CHECK(cx(1, 1) == Complex(1.0));
}

TEST_CASE("named gates resolve with parameters") {
  const std::vector<unsigned> one{4};
  CHECK(resolve_named_gate("XB", {}, one).matrix() == gate_xb(4).matrix());
  const std::vector<double> p{0, 1};
  CHECK(resolve_named_gate("LEVELSWAP", p, one).matrix() == gate_level_swap(0, 1, 4).matrix());
  const std::vector<unsigned> two{2, 3};
  CHECK(resolve_named_gate("CNOT", {}, two).matrix() == gate_cnot(2, 3).matrix());
  CHECK_THROWS(resolve_named_gate("FROB", {}, one));
  CHECK_THROWS(resolve_named_gate("CS", {}, one));
}

TEST_CASE("GateMatrix rejects wrong sizes and non-unitary matrices") {
  CHECK_THROWS(GateMatrix({2, 3}, eye(5)));
  Matrix m = eye(2);
  m(0, 1) = 0.1;
  CHECK_THROWS(GateMatrix({2}, m));
  CHECK_NOTHROW(GateMatrix({2}, eye(2)));
}

TEST_CASE("embedding matches explicit Kronecker products") {
  std::mt19937_64 rng(7);
  const WireDims d{2, 3, 2};
  const GateMatrix g1({3}, testing::random_unitary(3, rng));
  const std::vector<std::size_t> w1{1};
  CHECK(max_abs(embed(g1, w1, d) - kron(eye(2), kron(g1.matrix(), eye(2)))) < 1e-14);

  const GateMatrix g2({2, 3}, testing::random_unitary(6, rng));
  const std::vector<std::size_t> w01{0, 1};
  CHECK(max_abs(embed(g2, w01, d) - kron(g2.matrix(), eye(2))) < 1e-14);

  // Reversed wire order on a symmetric register equals conjugation by SWAP.
  const WireDims q{2, 2};
  const GateMatrix g3({2, 2}, testing::random_unitary(4, rng));
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  const std::vector<std::size_t> w10{1, 0};
  CHECK(max_abs(embed(g3, w10, q) - swap * g3.matrix() * swap) < 1e-14);
}

TEST_CASE("gate application is local and norm preserving") {
  std::mt19937_64 rng(11);
  const WireDims d{3, 2, 4};
  const GateMatrix g({2, 4}, testing::random_unitary(8, rng));
  const std::vector<std::size_t> w{1, 2};
  const PureState s(d, testing::random_state(24, rng));
  const PureState out = apply_gate(s, g, w);
  CHECK(std::abs(out.norm() - 1.0) < 1e-13);
  CHECK(max_abs(out.amplitudes() - embed(g, w, d) * s.amplitudes()) < 1e-13);
  // Reduced state of wire 0 is untouched.
  for (unsigned a = 0; a < 3; ++a) {
    for (unsigned b = 0; b < 3; ++b) {
      Complex before = 0, after = 0;
      for (std::size_t r = 0; r < 8; ++r) {
        before += s.amplitudes()(a * 8 + r) * std::conj(s.amplitudes()(b * 8 + r));
        after += out.amplitudes()(a * 8 + r) * std::conj(out.amplitudes()(b * 8 + r));
      }
      CHECK(std::abs(before - after) < 1e-13);
    }
  }
}

TEST_CASE("bad wire lists are rejected") {
  const WireDims d{2, 3};
  Matrix cols = eye(6);
  const std::vector<std::size_t> repeated{0, 0};
  const std::vector<std::size_t> out_of_range{2};
  const std::vector<std::size_t> wrong_dim{0};
  CHECK_THROWS(apply_to_columns(cols, gate_cnot(2, 2), repeated, d));
  CHECK_THROWS(apply_to_columns(cols, gate_xa(3), out_of_range, d));
  CHECK_THROWS(apply_to_columns(cols, gate_xa(3), wrong_dim, d));
}

TEST_CASE("global phase comparison") {
  std::mt19937_64 rng(3);
  const Matrix u = testing::random_unitary(5, rng);
  const Complex ph = std::polar(1.0, 0.73);
  const PhaseMatch m = equiv_up_to_global_phase(ph * u, u, 1e-12);
  CHECK(m.equivalent);
  CHECK(std::abs(m.phase - ph) < 1e-12);
  Matrix v = u;
  v(0, 0) += 1e-6;
  CHECK_FALSE(equiv_up_to_global_phase(v, u, 1e-10).equivalent);
}

TEST_CASE("circuit unitary is the ordered product of embedded steps") {
  std::mt19937_64 rng(5);
  const WireDims d{2, 3};
  Circuit c(d);
  const GateMatrix a({3}, testing::random_unitary(3, rng));
  const GateMatrix b({2, 3}, testing::random_unitary(6, rng));
  c.add("A", {}, {1}, a).add("B", {}, {0, 1}, b);
  const std::vector<std::size_t> w1{1}, w01{0, 1};
  CHECK(max_abs(circuit_unitary(c) - embed(b, w01, d) * embed(a, w1, d)) < 1e-13);
  CHECK(c.count_arity(2) == 1);
  CHECK(c.without_step(0).size() == 1);
  CHECK(max_abs(circuit_unitary(c.without_step(0)) - embed(b, w01, d)) < 1e-13);

  const PureState s(d, testing::random_state(6, rng));
  CHECK(max_abs(run(c, s).amplitudes() - circuit_unitary(c) * s.amplitudes()) < 1e-13);
  CHECK_THROWS(c.add("bad", {}, {2}, a));
}
