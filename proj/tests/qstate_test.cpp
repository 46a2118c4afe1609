// Copyright 2026 The gqt Authors
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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gqt/errors.hpp"
#include "gqt/qstate.hpp"
#include "gqt/rng.hpp"
#include "support.hpp"

namespace gqt {
namespace {

using testing::max_diff;

constexpr double kRt2 = std::numbers::sqrt2 / 2;

Circuit random_circuit(int n, Rng& rng, int gates) {
  Circuit c(n);
  for (int g = 0; g < gates; ++g) {
    const int t = static_cast<int>(rng.below(n));
    const double ang = testing::uniform_in(rng, 0, 2 * std::numbers::pi);
    switch (rng.below(n > 1 ? 4 : 1)) {
      case 0: c.add(Gate::single(t, mat2::hadamard())); break;
      case 1: {
        const int q = static_cast<int>((t + 1 + rng.below(n - 1)) % n);
        c.add(Gate::controlled({{q, static_cast<int>(rng.below(2))}}, t, mat2::rotation(ang)));
        break;
      }
      case 2: {
        const int q = static_cast<int>((t + 1 + rng.below(n - 1)) % n);
        c.add(Gate::swap(t, q));
        break;
      }
      default: c.add(Gate::controlled({{(t + 1) % n, 1}}, t, mat2::phase(ang)));
    }
  }
  return c;
}

QState random_state(int n, Rng& rng) {
  std::vector<Complex> v(dim_of(n));
  double norm = 0;
  for (auto& a : v) {
    a = {testing::uniform_in(rng, -1, 1), testing::uniform_in(rng, -1, 1)};
    norm += std::norm(a);
  }
  for (auto& a : v) a /= std::sqrt(norm);
  return QState::from_amplitudes(n, std::move(v));
}

TEST_CASE("hadamard on |0> gives the plus state") {
  const QState s = apply_gate(QState::basis(1, 0), Gate::single(0, mat2::hadamard()));
  CHECK(std::abs(s[0] - kRt2) < 1e-15);
  CHECK(std::abs(s[1] - kRt2) < 1e-15);
}

TEST_CASE("swap exchanges basis index 2 and 1") {
  const QState s = apply_gate(QState::basis(2, 2), Gate::swap(0, 1));
  CHECK(s.probability(1) == doctest::Approx(1.0));
  CHECK(std::abs(s[1] - 1.0) < 1e-15);
}

TEST_CASE("controlled phase multiplies |11> by i") {
  const Gate g = Gate::controlled({{0, 1}}, 1, mat2::phase(std::numbers::pi / 2));
  const QState s = apply_gate(QState::basis(2, 3), g);
  CHECK(std::abs(s[3] - Complex(0, 1)) < 1e-15);
  // Dense lift agrees.
  Circuit c(2);
  c.add(g);
  CHECK(std::abs(circuit_to_dense(c)(3, 3) - Complex(0, 1)) < 1e-15);
}

TEST_CASE("controlled gate is the identity when controls do not match") {
  for (int n = 3; n <= 5; ++n) {
    const Gate g = Gate::controlled({{0, 1}, {n - 1, 0}}, 1, mat2::rotation(0.7));
    for (std::uint64_t k = 0; k < dim_of(n); ++k) {
      const bool fires = ((k & 1U) == 1U) && (((k >> (n - 1)) & 1U) == 0U);
      if (fires) continue;
      const QState s = apply_gate(QState::basis(n, k), g);
      CHECK(s.max_abs_diff(QState::basis(n, k)) < 1e-15);
    }
  }
}

TEST_CASE("gate construction rejects non-unitary matrices and bad indices") {
  Mat2 bad = mat2::identity();
  bad[0] = 2.0;
  CHECK_THROWS_AS(Gate::single(0, bad), NotUnitary);
  CHECK_THROWS_AS(Gate::controlled({{1, 1}}, 1, mat2::hadamard()), IndexError);
  CHECK_THROWS_AS(Gate::swap(2, 2), IndexError);
  Circuit c(2);
  CHECK_THROWS_AS(c.add(Gate::single(2, mat2::hadamard())), IndexError);
  CHECK_THROWS_AS(apply_gate(QState::basis(1, 0), Gate::swap(0, 1)), IndexError);
}

TEST_CASE("empty circuit leaves the state unchanged") {
  Rng rng(3);
  const QState s = random_state(3, rng);
  CHECK(apply_circuit(s, Circuit(3)).max_abs_diff(s) == 0.0);
}

TEST_CASE("single-gate circuit equals apply_gate") {
  Rng rng(5);
  const QState s = random_state(3, rng);
  const Gate g = Gate::controlled({{2, 1}}, 0, mat2::rotation(1.1));
  Circuit c(3);
  c.add(g);
  CHECK(apply_circuit(s, c).max_abs_diff(apply_gate(s, g)) == 0.0);
}

TEST_CASE("apply_circuit rejects a qubit-count mismatch") {
  CHECK_THROWS_AS(apply_circuit(QState::basis(2, 0), Circuit(3)), DimensionError);
}

TEST_CASE("circuit_to_dense on small circuits") {
  Circuit h(1);
  h.add(Gate::single(0, mat2::hadamard()));
  CHECK(max_diff(circuit_to_dense(h), testing::hadamard_power(1)) < 1e-15);

  Circuit sw(2);
  sw.add(Gate::swap(0, 1));
  const DenseUnitary m = circuit_to_dense(sw);
  for (std::uint64_t r = 0; r < 4; ++r) {
    for (std::uint64_t c = 0; c < 4; ++c) {
      const std::uint64_t image = (c == 1 ? 2 : c == 2 ? 1 : c);
      CHECK(m(r, c) == Complex(r == image ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("dense and circuit application commute on all basis states") {
  Rng rng(17);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const Circuit c = random_circuit(n, rng, 3 * n + 2);
      const DenseUnitary m = circuit_to_dense(c);
      CHECK(m.matrix().unitarity_error() < 1e-9);
      for (std::uint64_t k = 0; k < dim_of(n); ++k) {
        const QState b = QState::basis(n, k);
        const QState via_c = apply_circuit(b, c);
        CHECK(via_c.max_abs_diff(apply_dense(b, m)) < 1e-9);
        CHECK(std::abs(via_c.norm() - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("apply_dense: identity, H(x)H and norm preservation") {
  const DenseUnitary id = DenseUnitary::from_matrix(2, ComplexMatrix::identity(4));
  Rng rng(23);
  const QState s = random_state(2, rng);
  CHECK(apply_dense(s, id).max_abs_diff(s) == 0.0);

  Circuit hh(2);
  hh.add(Gate::single(0, mat2::hadamard())).add(Gate::single(1, mat2::hadamard()));
  const QState u = apply_dense(QState::basis(2, 0), circuit_to_dense(hh));
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(std::abs(u[k] - 0.5) < 1e-15);

  for (int rep = 0; rep < 20; ++rep) {
    const DenseUnitary m = circuit_to_dense(random_circuit(4, rng, 12));
    CHECK(std::abs(apply_dense(random_state(4, rng), m).norm() - 1.0) < 1e-9);
  }
}

TEST_CASE("dense matrices are refused above the cap") {
  const int saved = dense_cap();
  set_dense_cap(3);
  CHECK_THROWS_AS(circuit_to_dense(Circuit(4)), CapExceeded);
  set_dense_cap(saved);
  CHECK_THROWS_AS(set_dense_cap(0), InvalidInput);
}

TEST_CASE("from_amplitudes validates normalization and length") {
  CHECK_THROWS_AS(QState::from_amplitudes(1, {1.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(QState::from_amplitudes(2, {1.0, 0.0}), DimensionError);
  CHECK_THROWS_AS(QState::basis(2, 4), IndexError);
}

TEST_CASE("measure_all on a point mass") {
  const Histogram h = measure_all(QState::basis(3, 0), 99, 100);
  REQUIRE(h.size() == 1);
  CHECK(h.at(0) == 100);
  CHECK_THROWS_AS(measure_all(QState::basis(1, 0), 1, 0), InvalidInput);
}

TEST_CASE("measure_all on the plus state stays within [0.49, 0.51]") {
  const QState plus = QState::from_amplitudes(1, {kRt2, kRt2});
  const Histogram h = measure_all(plus, 2014, 100000);
  const double f0 = static_cast<double>(h.at(0)) / 1e5;
  CHECK(f0 > 0.49);
  CHECK(f0 < 0.51);
}

TEST_CASE("measure_all passes a chi-square test for (0.25, 0.75)") {
  const QState s = QState::from_amplitudes(1, {0.5, std::sqrt(0.75)});
  const double shots = 100000;
  const Histogram h = measure_all(s, 7, 100000);
  const double e0 = 0.25 * shots, e1 = 0.75 * shots;
  const double o0 = static_cast<double>(h.count(0) ? h.at(0) : 0);
  const double o1 = static_cast<double>(h.count(1) ? h.at(1) : 0);
  const double chi2 = (o0 - e0) * (o0 - e0) / e0 + (o1 - e1) * (o1 - e1) / e1;
  CHECK(chi2 < 10.83);  // 1 dof, p = 0.001
}

TEST_CASE("measure_all is deterministic given the seed") {
  Rng rng(41);
  const QState s = random_state(4, rng);
  CHECK(measure_all(s, 5, 5000) == measure_all(s, 5, 5000));
  CHECK(measure_all(s, 5, 5000) != measure_all(s, 6, 5000));
}

TEST_CASE("kron places the low factor on the low qubits") {
  Circuit h(1);
  h.add(Gate::single(0, mat2::hadamard()));
  Circuit x(1);
  x.add(Gate::single(0, mat2::pauli_x()));
  const DenseUnitary k = kron(circuit_to_dense(x), circuit_to_dense(h));
  Circuit both(2);
  both.add(Gate::single(0, mat2::hadamard())).add(Gate::single(1, mat2::pauli_x()));
  CHECK(max_diff(k, circuit_to_dense(both)) < 1e-15);
}

TEST_CASE("reverse_bits") {
  CHECK(reverse_bits(1, 3) == 4);
  CHECK(reverse_bits(6, 3) == 3);
  for (std::uint64_t v = 0; v < 64; ++v) CHECK(reverse_bits(v, 6) == testing::reversed(v, 6));
}

TEST_CASE("rng streams are reproducible and split deterministically") {
  Rng a(1), b(1);
  for (int k = 0; k < 10; ++k) CHECK(a.next_u64() == b.next_u64());
  CHECK(Rng(1).split(3).next_u64() == Rng(1).split(3).next_u64());
  CHECK(Rng(1).split(3).next_u64() != Rng(1).split(4).next_u64());
  Rng c(8);
  for (int k = 0; k < 1000; ++k) {
    const double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.below(7) < 7);
  }
}

}  // namespace
}  // namespace gqt
