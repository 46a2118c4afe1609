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
#include "gqt/haar.hpp"
#include "support.hpp"

namespace gqt {
namespace {

constexpr double kR = std::numbers::sqrt2;

TEST_CASE("n = 1 gives A_2 and the Hadamard gate") {
  const HaarMatrix h = haar_matrix(1);
  CHECK(h.a(0, 0) == 1);
  CHECK(h.a(0, 1) == 1);
  CHECK(h.a(1, 0) == 1);
  CHECK(h.a(1, 1) == -1);
  CHECK(testing::max_diff(h.p_unitary(), testing::hadamard_power(1)) < 1e-15);
}

TEST_CASE("P_4 matches the printed matrix") {
  const double printed[4][4] = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {kR, -kR, 0, 0}, {0, 0, kR, -kR}};
  const HaarMatrix h = haar_matrix(2);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) CHECK(std::abs(h.p(r, c) - printed[r][c] / 2) < 1e-12);
  }
}

TEST_CASE("Haar matrix follows the Kronecker recursion and is orthogonal") {
  for (int n = 1; n <= 8; ++n) {
    const HaarMatrix h = haar_matrix(n);
    const auto oracle = testing::haar_oracle(n);
    bool same = true;
    for (std::uint64_t r = 0; r < h.dim(); ++r) {
      for (std::uint64_t c = 0; c < h.dim(); ++c) same = same && h.a(r, c) == oracle[r][c];
    }
    CHECK(same);
    CHECK(h.p_unitary().matrix().unitarity_error() < 1e-10);
  }
  CHECK(haar_matrix(3).p_unitary().matrix().unitarity_error() < 1e-12);
}

TEST_CASE("slot and index conversions") {
  const std::vector<int> slots{1, 0, 1, 1};
  CHECK(slots_to_index(slots) == 11);
  CHECK(index_to_slots(4, 11) == slots);
  CHECK(level_ket_index(0, 0) == 1);
  CHECK(level_ket_index(2, 3) == 7);
  for (std::uint64_t k = 0; k < 64; ++k) {
    CHECK(slots_to_index(index_to_slots(6, k)) == k);
    CHECK(haar_ket_index(6, haar_ket_of_index(6, k)) == k);
  }
  CHECK(haar_ket_of_index(3, 0) == HaarKet{});
  CHECK(haar_ket_of_index(3, 6) == HaarKet{2, 2});
  CHECK_THROWS_AS(haar_ket_index(3, HaarKet{3, 0}), IndexError);
  CHECK_THROWS_AS(haar_ket_index(3, HaarKet{1, 2}), IndexError);
}

TEST_CASE("unnormalized column identity holds exactly") {
  const HaarMatrix a2 = haar_matrix(1);
  CHECK(haar_matrix_identity_check(a2, 1));
  CHECK(haar_identity_column(1, 1) == std::vector<int>{1, -1});
  for (int n = 1; n <= 8; ++n) {
    const HaarMatrix h = haar_matrix(n);
    const auto oracle = testing::haar_oracle(n);
    for (std::uint64_t x = 0; x < h.dim(); ++x) {
      CHECK(haar_matrix_identity_check(h, x));
      const std::vector<int> col = haar_identity_column(n, x);
      bool same = true;
      for (std::uint64_t r = 0; r < h.dim(); ++r) same = same && col[r] == oracle[r][x];
      CHECK(same);
    }
  }
}

TEST_CASE("a flipped sign breaks the column identity") {
  const HaarMatrix h = haar_matrix(3);
  const HaarMatrix bad = h.with_a(4, 0, -1);
  CHECK_FALSE(haar_matrix_identity_check(bad, 0));
  CHECK(haar_matrix_identity_check(bad, 2));
  CHECK_THROWS_AS(h.with_a(0, 0, 2), InvalidInput);
  CHECK_THROWS_AS(HaarMatrix(1, {0, 0, 1, -1}), InvalidInput);
}

TEST_CASE("closed-form forward action") {
  const QState s0 = haar_apply_basis(1, 0);
  CHECK(std::abs(s0[0] - kR / 2) < 1e-15);
  CHECK(std::abs(s0[1] - kR / 2) < 1e-15);

  const QState s = haar_apply_basis(2, 1);
  const double col1[4] = {0.5, 0.5, -kR / 2, 0.0};
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(std::abs(s[k] - col1[k]) < 1e-12);

  for (int n = 1; n <= 8; ++n) {
    const HaarMatrix h = haar_matrix(n);
    for (std::uint64_t x = 0; x < h.dim(); ++x) {
      const QState col = haar_apply_basis(n, x);
      double worst = 0.0;
      int nonzero = 0;
      for (std::uint64_t r = 0; r < h.dim(); ++r) {
        worst = std::max(worst, std::abs(col[r] - h.p(r, x)));
        if (col[r] != 0.0) ++nonzero;
      }
      CHECK(worst < 1e-10);
      CHECK(nonzero == n + 1);
    }
  }
}

TEST_CASE("closed-form inverse action") {
  const QState uniform = haar_inverse_apply(2, HaarKet{});
  for (std::uint64_t k = 0; k < 4; ++k) CHECK(std::abs(uniform[k] - 0.5) < 1e-15);

  const QState minus = haar_inverse_apply(2, HaarKet{1, 0});
  CHECK(std::abs(minus[0] - kR / 2) < 1e-15);
  CHECK(std::abs(minus[1] + kR / 2) < 1e-15);
  CHECK(std::abs(minus[2]) == 0.0);
  CHECK(std::abs(minus[3]) == 0.0);

  for (int n = 1; n <= 6; ++n) {
    const HaarMatrix h = haar_matrix(n);
    for (std::uint64_t k = 0; k < h.dim(); ++k) {
      const QState out = haar_inverse_apply(n, haar_ket_of_index(n, k));
      double worst = 0.0;
      for (std::uint64_t r = 0; r < h.dim(); ++r) {
        worst = std::max(worst, std::abs(out[r] - h.p(k, r)));
      }
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("inverse undoes the forward transform on every basis state") {
  for (int n = 1; n <= 6; ++n) {
    const HaarMatrix h = haar_matrix(n);
    for (std::uint64_t x = 0; x < h.dim(); ++x) {
      const QState fwd = haar_apply_basis(n, x);
      // Linear combination of inverse images weighted by forward amplitudes.
      std::vector<Complex> back(h.dim(), 0.0);
      for (std::uint64_t k = 0; k < h.dim(); ++k) {
        if (fwd[k] == 0.0) continue;
        const QState img = haar_inverse_apply(n, haar_ket_of_index(n, k));
        for (std::uint64_t r = 0; r < h.dim(); ++r) back[r] += fwd[k] * img[r];
      }
      double worst = 0.0;
      for (std::uint64_t r = 0; r < h.dim(); ++r) {
        worst = std::max(worst, std::abs(back[r] - (r == x ? 1.0 : 0.0)));
      }
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("inverse circuit shapes") {
  const Circuit one = haar_inverse_circuit(1, 0);
  CHECK(one.count(GateKind::kSwap) == 0);
  CHECK(one.count_label("M") == 1);
  CHECK(one.count_label("H") == 0);
  CHECK(haar_inverse_circuit(3, 1).count(GateKind::kSwap) == 3);
  CHECK_THROWS_AS(haar_inverse_circuit(3, 3), IndexError);
  CHECK_THROWS_AS(haar_inverse_circuit(3, -1), IndexError);
}

TEST_CASE("inverse circuit reproduces the closed form") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < n; ++i) {
      const Circuit c = haar_inverse_circuit(n, i);
      const std::size_t swaps = static_cast<std::size_t>((i + 1) * (n - i - 1) + i);
      CHECK(c.count(GateKind::kSwap) == swaps);
      CHECK(c.count_label("H") == static_cast<std::size_t>(n - i - 1));
      CHECK(c.size() <= static_cast<std::size_t>(n * n + 2 * n));
      for (std::uint64_t prefix = 0; prefix < dim_of(i); ++prefix) {
        const HaarKet ket{i, prefix};
        const QState in = QState::basis(n, haar_ket_index(n, ket));
        CHECK(apply_circuit(in, c).max_abs_diff(haar_inverse_apply(n, ket)) < 1e-10);
      }
    }
  }
}

}  // namespace
}  // namespace gqt
