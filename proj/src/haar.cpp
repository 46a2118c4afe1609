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

#include "gqt/haar.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>

namespace gqt {

namespace {

std::vector<double> normalize_rows(int n, const std::vector<int>& a) {
  const std::uint64_t dim = dim_of(n);
  std::vector<double> p(a.size());
  for (std::uint64_t r = 0; r < dim; ++r) {
    std::int64_t sq = 0;
    for (std::uint64_t c = 0; c < dim; ++c) sq += a[r * dim + c] * a[r * dim + c];
    if (sq == 0) throw InvalidInput("Haar matrix row " + std::to_string(r) + " is zero");
    const double inv = 1.0 / std::sqrt(static_cast<double>(sq));
    for (std::uint64_t c = 0; c < dim; ++c) p[r * dim + c] = a[r * dim + c] * inv;
  }
  return p;
}

}  // namespace

HaarMatrix::HaarMatrix(int n, std::vector<int> a) : n_(n), a_(std::move(a)) {
  if (n < 1 || a_.size() != dim_of(n) * dim_of(n)) {
    throw DimensionError("HaarMatrix: entry count does not match n");
  }
  for (int v : a_) {
    if (v < -1 || v > 1) throw InvalidInput("HaarMatrix: entries must be in {-1,0,1}");
  }
  p_ = normalize_rows(n_, a_);
}

HaarMatrix HaarMatrix::with_a(std::uint64_t row, std::uint64_t col,
                              int value) const {
  std::vector<int> a = a_;
  a.at(row * dim() + col) = value;
  return HaarMatrix(n_, std::move(a));
}

DenseUnitary HaarMatrix::p_unitary() const {
  ComplexMatrix m(dim());
  for (std::uint64_t r = 0; r < dim(); ++r) {
    for (std::uint64_t c = 0; c < dim(); ++c) m(r, c) = p(r, c);
  }
  return DenseUnitary::from_matrix(n_, std::move(m));
}

HaarMatrix haar_matrix(int n) {
  require_dense(n, "haar_matrix");
  std::vector<int> a = {1, 1, 1, -1};
  for (int level = 2; level <= n; ++level) {
    const std::uint64_t half = dim_of(level - 1);
    const std::uint64_t dim = 2 * half;
    std::vector<int> next(dim * dim, 0);
    for (std::uint64_t r = 0; r < half; ++r) {
      for (std::uint64_t c = 0; c < half; ++c) {
        // A (x) [1, 1]
        next[r * dim + 2 * c] = a[r * half + c];
        next[r * dim + 2 * c + 1] = a[r * half + c];
      }
      // I (x) [1, -1]
      next[(half + r) * dim + 2 * r] = 1;
      next[(half + r) * dim + 2 * r + 1] = -1;
    }
    a = std::move(next);
  }
  return HaarMatrix(n, std::move(a));
}

std::uint64_t slots_to_index(std::span<const int> slots) {
  std::uint64_t idx = 0;
  for (int r : slots) {
    if (r != 0 && r != 1) throw InvalidInput("slot values must be 0 or 1");
    idx = (idx << 1) | static_cast<std::uint64_t>(r);
  }
  return idx;
}

std::vector<int> index_to_slots(int n, std::uint64_t index) {
  std::vector<int> slots(n);
  for (int k = 0; k < n; ++k) slots[k] = static_cast<int>((index >> (n - 1 - k)) & 1U);
  return slots;
}

std::uint64_t level_ket_index(int i, std::uint64_t prefix) {
  return dim_of(i) + prefix;
}

std::vector<int> haar_identity_column(int n, std::uint64_t x) {
  const std::vector<int> xs = index_to_slots(n, x);
  std::vector<int> col(dim_of(n), 0);
  col[0] += 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t prefix = x >> (n - i);  // x_0 .. x_{i-1}
    col[level_ket_index(i, prefix)] += xs[i] ? -1 : 1;
  }
  return col;
}

bool haar_matrix_identity_check(const HaarMatrix& h, std::uint64_t x) {
  if (x >= h.dim()) throw IndexError("column index out of range");
  const std::vector<int> col = haar_identity_column(h.n(), x);
  for (std::uint64_t r = 0; r < h.dim(); ++r) {
    if (h.a(r, x) != col[r]) return false;
  }
  return true;
}

QState haar_apply_basis(int n, std::uint64_t x) {
  if (n < 1 || n > kStateCap) throw InvalidInput("haar_apply_basis: bad n");
  if (x >= dim_of(n)) throw IndexError("haar_apply_basis: index out of range");
  std::vector<Complex> amps(dim_of(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim_of(n)));
  amps[0] = scale;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t prefix = x >> (n - i);
    const bool xi = (x >> (n - 1 - i)) & 1U;
    const double mag = scale * std::sqrt(static_cast<double>(dim_of(i)));
    amps[level_ket_index(i, prefix)] = xi ? -mag : mag;
  }
  return QState::from_amplitudes(n, std::move(amps));
}

HaarKet haar_ket_of_index(int n, std::uint64_t index) {
  if (index >= dim_of(n)) throw IndexError("haar_ket_of_index: out of range");
  if (index == 0) return {};
  const int i = std::bit_width(index) - 1;
  return {i, index - dim_of(i)};
}

std::uint64_t haar_ket_index(int n, const HaarKet& ket) {
  if (ket.level == -1) {
    if (ket.prefix != 0) throw IndexError("zero ket carries no prefix");
    return 0;
  }
  if (ket.level < 0 || ket.level >= n) throw IndexError("ket level out of range");
  if (ket.prefix >= dim_of(ket.level)) throw IndexError("ket prefix out of range");
  return level_ket_index(ket.level, ket.prefix);
}

QState haar_inverse_apply(int n, const HaarKet& ket) {
  haar_ket_index(n, ket);  // validates
  const std::uint64_t dim = dim_of(n);
  std::vector<Complex> amps(dim);
  if (ket.level == -1) {
    const double v = 1.0 / std::sqrt(static_cast<double>(dim));
    for (auto& a : amps) a = v;
    return QState::from_amplitudes(n, std::move(amps));
  }
  const int i = ket.level;
  const std::uint64_t tail = dim_of(n - i - 1);
  const double v = 1.0 / std::sqrt(static_cast<double>(dim_of(n - i)));
  const std::uint64_t base = ket.prefix << (n - i);
  for (std::uint64_t rest = 0; rest < tail; ++rest) {
    amps[base + rest] = v;          // slot i = 0
    amps[base + tail + rest] = -v;  // slot i = 1
  }
  return QState::from_amplitudes(n, std::move(amps));
}

Circuit haar_inverse_circuit(int n, int i) {
  if (i < 0 || i >= n) throw IndexError("haar_inverse_circuit: i out of range");
  Circuit c(n);
  auto qubit = [n](int slot) { return n - 1 - slot; };
  auto swap_slots = [&](int s) { c.add(Gate::swap(qubit(s), qubit(s + 1))); };
  // Each zero, last first, moves right past |1> and the i prefix slots.
  for (int z = n - i - 2; z >= 0; --z) {
    for (int s = z; s < z + i + 1; ++s) swap_slots(s);
  }
  // |1> moves from slot 0 past the prefix to slot i.
  for (int s = 0; s < i; ++s) swap_slots(s);
  c.add(Gate::single(qubit(i), mat2::hadamard(), "M"));
  for (int s = i + 1; s < n; ++s) c.add(Gate::single(qubit(s), mat2::hadamard(), "H"));
  return c;
}

}  // namespace gqt
