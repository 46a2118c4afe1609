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

#include "gqt/qstate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <set>

#include "gqt/rng.hpp"

namespace gqt {

namespace {

std::atomic<int> g_dense_cap{12};

std::string str(int v) { return std::to_string(v); }

}  // namespace

int dense_cap() { return g_dense_cap.load(); }

void set_dense_cap(int n) {
  if (n < 1 || n > 15) {
    throw InvalidInput("dense cap must lie in [1, 15], got " + str(n));
  }
  g_dense_cap.store(n);
}

void require_dense(int n, const char* what) {
  if (n > dense_cap()) {
    throw CapExceeded(std::string(what) + ": n = " + str(n) +
                      " exceeds dense cap " + str(dense_cap()));
  }
}

std::uint64_t reverse_bits(std::uint64_t k, int n) {
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    r |= ((k >> i) & 1U) << (n - 1 - i);
  }
  return r;
}

// ---------------------------------------------------------------------------
// 2x2 matrices

namespace mat2 {

Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

Mat2 hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return {s, s, s, -s};
}

Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }

Mat2 phase(double angle) {
  return {1.0, 0.0, 0.0, std::polar(1.0, angle)};
}

Mat2 rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, s, -s, c};
}

Mat2 multiply(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

double unitarity_error(const Mat2& u) {
  double err = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const Complex v =
          std::conj(u[r]) * u[c] + std::conj(u[2 + r]) * u[2 + c];
      err = std::max(err, std::abs(v - Complex(r == c ? 1.0 : 0.0)));
    }
  }
  return err;
}

}  // namespace mat2

// ---------------------------------------------------------------------------
// Gates and circuits

namespace {

void require_unitary(const Mat2& u) {
  const double err = mat2::unitarity_error(u);
  if (!(err < kGateTol)) {
    throw NotUnitary("gate matrix is not unitary (error " +
                     std::to_string(err) + ")");
  }
}

}  // namespace

Gate Gate::single(int target, const Mat2& u, std::string label) {
  if (target < 0) throw IndexError("negative target qubit");
  require_unitary(u);
  Gate g;
  g.kind = GateKind::kSingle;
  g.target = target;
  g.u = u;
  g.label = std::move(label);
  return g;
}

Gate Gate::controlled(std::vector<Control> controls, int target,
                      const Mat2& u, std::string label) {
  if (target < 0) throw IndexError("negative target qubit");
  require_unitary(u);
  std::set<int> seen{target};
  for (const Control& c : controls) {
    if (c.qubit < 0) throw IndexError("negative control qubit");
    if (c.value != 0 && c.value != 1) {
      throw InvalidInput("control value must be 0 or 1");
    }
    if (!seen.insert(c.qubit).second) {
      throw IndexError("control qubit " + str(c.qubit) +
                       " repeats another gate qubit");
    }
  }
  Gate g;
  g.kind = GateKind::kControlled;
  g.target = target;
  g.controls = std::move(controls);
  g.u = u;
  g.label = std::move(label);
  return g;
}

Gate Gate::swap(int a, int b) {
  if (a < 0 || b < 0) throw IndexError("negative swap qubit");
  if (a == b) throw IndexError("swap of a qubit with itself");
  Gate g;
  g.kind = GateKind::kSwap;
  g.target = a;
  g.other = b;
  g.label = "SWAP";
  return g;
}

int Gate::max_qubit() const {
  int m = std::max(target, other);
  for (const Control& c : controls) m = std::max(m, c.qubit);
  return m;
}

Circuit::Circuit(int n) : n_(n) {
  if (n < 1 || n > kStateCap) {
    throw InvalidInput("qubit count must lie in [1, " + str(kStateCap) +
                       "], got " + str(n));
  }
}

Circuit& Circuit::add(Gate g) {
  if (g.max_qubit() >= n_) {
    throw IndexError("gate touches qubit " + str(g.max_qubit()) +
                     " in a " + str(n_) + "-qubit circuit");
  }
  gates_.push_back(std::move(g));
  return *this;
}

std::size_t Circuit::count(GateKind kind) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      gates_, [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t Circuit::count_label(const std::string& label) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      gates_, [&label](const Gate& g) { return g.label == label; }));
}

// ---------------------------------------------------------------------------
// States

QState QState::basis(int n, std::uint64_t k) {
  if (n < 1 || n > kStateCap) {
    throw InvalidInput("qubit count must lie in [1, " + str(kStateCap) +
                       "], got " + str(n));
  }
  if (k >= dim_of(n)) {
    throw IndexError("basis index " + std::to_string(k) +
                     " out of range for " + str(n) + " qubits");
  }
  std::vector<Complex> amps(dim_of(n));
  amps[k] = 1.0;
  return QState(n, std::move(amps));
}

QState QState::from_amplitudes(int n, std::vector<Complex> amps) {
  if (n < 1 || n > kStateCap) {
    throw InvalidInput("qubit count must lie in [1, " + str(kStateCap) +
                       "], got " + str(n));
  }
  if (amps.size() != dim_of(n)) {
    throw DimensionError("expected " + std::to_string(dim_of(n)) +
                         " amplitudes, got " + std::to_string(amps.size()));
  }
  QState s(n, std::move(amps));
  if (std::abs(s.norm() - 1.0) >= kStateTol) {
    throw InvalidInput("amplitudes are not normalized (norm " +
                       std::to_string(s.norm()) + ")");
  }
  return s;
}

double QState::norm() const {
  double acc = 0.0;
  for (const Complex& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

double QState::max_abs_diff(const QState& other) const {
  if (other.dim() != dim()) {
    throw DimensionError("state dimensions differ");
  }
  double d = 0.0;
  for (std::uint64_t k = 0; k < dim(); ++k) {
    d = std::max(d, std::abs(amps_[k] - other.amps_[k]));
  }
  return d;
}

namespace {

void apply_in_place(std::vector<Complex>& amps, const Gate& g) {
  const std::uint64_t dim = amps.size();
  if (g.kind == GateKind::kSwap) {
    const std::uint64_t ma = std::uint64_t{1} << g.target;
    const std::uint64_t mb = std::uint64_t{1} << g.other;
    for (std::uint64_t k = 0; k < dim; ++k) {
      // Visit each exchanged pair once, from the side with bit a set.
      if ((k & ma) && !(k & mb)) std::swap(amps[k], amps[(k ^ ma) | mb]);
    }
    return;
  }
  std::uint64_t cmask = 0;
  std::uint64_t cvalue = 0;
  for (const Control& c : g.controls) {
    cmask |= std::uint64_t{1} << c.qubit;
    if (c.value) cvalue |= std::uint64_t{1} << c.qubit;
  }
  const std::uint64_t t = std::uint64_t{1} << g.target;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if ((k & t) || (k & cmask) != cvalue) continue;
    const Complex a0 = amps[k];
    const Complex a1 = amps[k | t];
    amps[k] = g.u[0] * a0 + g.u[1] * a1;
    amps[k | t] = g.u[2] * a0 + g.u[3] * a1;
  }
}

}  // namespace

QState apply_gate(const QState& state, const Gate& g) {
  if (g.max_qubit() >= state.n()) {
    throw IndexError("gate touches qubit " + str(g.max_qubit()) +
                     " on a " + str(state.n()) + "-qubit state");
  }
  std::vector<Complex> amps = state.amps_;
  apply_in_place(amps, g);
  return QState(state.n(), std::move(amps));
}

QState apply_circuit(const QState& state, const Circuit& c) {
  if (c.n() != state.n()) {
    throw DimensionError("circuit has " + str(c.n()) +
                         " qubits, state has " + str(state.n()));
  }
  std::vector<Complex> amps = state.amps_;
  for (const Gate& g : c.gates()) apply_in_place(amps, g);
  return QState(state.n(), std::move(amps));
}

DenseUnitary circuit_to_dense(const Circuit& c) {
  require_dense(c.n(), "circuit_to_dense");
  const std::uint64_t dim = dim_of(c.n());
  ComplexMatrix m(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    const QState col = apply_circuit(QState::basis(c.n(), x), c);
    for (std::uint64_t y = 0; y < dim; ++y) m(y, x) = col[y];
  }
  return DenseUnitary::from_matrix(c.n(), std::move(m));
}

QState apply_dense(const QState& state, const DenseUnitary& m) {
  if (m.n() != state.n()) {
    throw DimensionError("matrix has " + str(m.n()) + " qubits, state has " +
                         str(state.n()));
  }
  const std::uint64_t dim = state.dim();
  std::vector<Complex> out(dim);
  for (std::uint64_t y = 0; y < dim; ++y) {
    Complex acc = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) acc += m(y, x) * state[x];
    out[y] = acc;
  }
  double nrm = 0.0;
  for (const Complex& a : out) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  if (std::abs(nrm - 1.0) >= kStateTol) {
    throw NotUnitary("apply_dense: output norm " + std::to_string(nrm));
  }
  return QState::from_amplitudes(state.n(), std::move(out));
}

Histogram measure_all(const QState& state, std::uint64_t seed,
                      std::uint64_t shots) {
  if (shots == 0) throw InvalidInput("measure_all: shots must be >= 1");
  std::vector<double> cumulative(state.dim());
  double acc = 0.0;
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    acc += state.probability(k);
    cumulative[k] = acc;
  }
  Rng rng(seed);
  Histogram hist;
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    // upper_bound lands on a strictly increasing step, i.e. an outcome of
    // positive probability; u can only round up to acc at the very end.
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    auto k = static_cast<std::uint64_t>(it - cumulative.begin());
    if (it == cumulative.end()) {
      k = state.dim() - 1;
      while (k > 0 && state.probability(k) == 0.0) --k;
    }
    ++hist[k];
  }
  return hist;
}

// ---------------------------------------------------------------------------
// Dense matrices

ComplexMatrix ComplexMatrix::identity(std::uint64_t dim) {
  ComplexMatrix m(dim);
  for (std::uint64_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(dim_);
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t j = 0; j < dim_; ++j) r(j, i) = std::conj((*this)(i, j));
  }
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(dim_);
  for (std::uint64_t i = 0; i < data_.size(); ++i) {
    r.data_[i] = std::conj(data_[i]);
  }
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(dim_);
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t j = 0; j < dim_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (rhs.dim_ != dim_) throw DimensionError("matrix product: size mismatch");
  ComplexMatrix r(dim_);
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t k = 0; k < dim_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == 0.0) continue;
      for (std::uint64_t j = 0; j < dim_; ++j) r(i, j) += a * rhs(k, j);
    }
  }
  return r;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionError("matrix sizes differ");
  double d = 0.0;
  for (std::uint64_t i = 0; i < data_.size(); ++i) {
    d = std::max(d, std::abs(data_[i] - other.data_[i]));
  }
  return d;
}

double ComplexMatrix::unitarity_error() const {
  // (M^dagger M)_{ij} = sum_k conj(M_ki) M_kj, accumulated row by row of M.
  std::vector<Complex> g(dim_ * dim_);
  for (std::uint64_t k = 0; k < dim_; ++k) {
    for (std::uint64_t i = 0; i < dim_; ++i) {
      const Complex a = std::conj((*this)(k, i));
      if (a == 0.0) continue;
      for (std::uint64_t j = 0; j < dim_; ++j) g[i * dim_ + j] += a * (*this)(k, j);
    }
  }
  double err = 0.0;
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t j = 0; j < dim_; ++j) {
      err = std::max(err, std::abs(g[i * dim_ + j] - Complex(i == j ? 1.0 : 0.0)));
    }
  }
  return err;
}

DenseUnitary DenseUnitary::from_matrix(int n, ComplexMatrix m) {
  if (n < 1 || m.dim() != dim_of(n)) {
    throw DimensionError("matrix dimension does not match n = " + str(n));
  }
  if (n <= kVerifyCap) {
    const double err = m.unitarity_error();
    if (!(err < kStateTol)) {
      throw NotUnitary("matrix is not unitary (max |M^dagger M - I| = " +
                       std::to_string(err) + ")");
    }
  }
  return DenseUnitary(n, std::move(m));
}

DenseUnitary kron(const DenseUnitary& high, const DenseUnitary& low) {
  const int n = high.n() + low.n();
  require_dense(n, "kron");
  const std::uint64_t dl = low.dim();
  ComplexMatrix m(dim_of(n));
  for (std::uint64_t r = 0; r < m.dim(); ++r) {
    for (std::uint64_t c = 0; c < m.dim(); ++c) {
      m(r, c) = high(r / dl, c / dl) * low(r % dl, c % dl);
    }
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

}  // namespace gqt
