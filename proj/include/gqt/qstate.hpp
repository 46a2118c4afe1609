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

#pragma once

// Statevector substrate: states, gates, circuits and dense unitaries.
//
// Basis convention (used everywhere in the library): basis index k encodes
// the qubit values (x_0, ..., x_{n-1}) as k = sum_i x_i * 2^i, i.e. qubit i
// carries weight 2^i. Dense matrices are stored row-major with
// M[row = y][col = x] = <y|U|x>.

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gqt/errors.hpp"

namespace gqt {

using Complex = std::complex<double>;

/// Equality tolerance for states and dense matrices.
inline constexpr double kStateTol = 1e-9;
/// Unitarity tolerance for 2x2 gate matrices.
inline constexpr double kGateTol = 1e-12;

/// Largest n for which 2^n x 2^n matrices are materialized.
int dense_cap();
void set_dense_cap(int n);
/// Largest n for statevector-only operations.
inline constexpr int kStateCap = 20;

/// Throws CapExceeded if n > dense_cap().
void require_dense(int n, const char* what);

inline std::uint64_t dim_of(int n) { return std::uint64_t{1} << n; }

/// 2x2 complex matrix, row-major: {u00, u01, u10, u11}.
using Mat2 = std::array<Complex, 4>;

namespace mat2 {
Mat2 identity();
Mat2 hadamard();
Mat2 pauli_x();
/// diag(1, exp(i * angle)).
Mat2 phase(double angle);
/// [[cos t, sin t], [-sin t, cos t]]: maps |0> to cos t|0> - sin t|1>.
Mat2 rotation(double theta);
Mat2 multiply(const Mat2& a, const Mat2& b);
/// max |u^dagger u - I| entry.
double unitarity_error(const Mat2& u);
}  // namespace mat2

enum class GateKind { kSingle, kControlled, kSwap };

/// A control condition: gate acts only when qubit `qubit` holds `value`.
struct Control {
  int qubit = 0;
  int value = 1;
  friend bool operator==(const Control&, const Control&) = default;
};

/// One primitive gate. Construct through the factories, which reject
/// non-unitary matrices and repeated qubits.
struct Gate {
  GateKind kind = GateKind::kSingle;
  int target = 0;
  /// Second qubit of a swap; unused otherwise.
  int other = -1;
  std::vector<Control> controls;
  Mat2 u = mat2::identity();
  /// Free-form tag carried into circuit dumps ("H", "T", "R", ...).
  std::string label;

  static Gate single(int target, const Mat2& u, std::string label = {});
  static Gate controlled(std::vector<Control> controls, int target,
                         const Mat2& u, std::string label = {});
  static Gate swap(int a, int b);

  /// Largest qubit index touched.
  int max_qubit() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  explicit Circuit(int n);

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends g; throws IndexError if g touches a qubit >= n.
  Circuit& add(Gate g);

  std::size_t count(GateKind kind) const;
  std::size_t count_label(const std::string& label) const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
};

class QState {
 public:
  /// |k> on n qubits.
  static QState basis(int n, std::uint64_t k);
  /// Takes ownership of amplitudes; the norm must already be 1 within
  /// kStateTol (no renormalization is done).
  static QState from_amplitudes(int n, std::vector<Complex> amps);

  int n() const { return n_; }
  std::uint64_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::uint64_t k) const { return amps_[k]; }

  double norm() const;
  double probability(std::uint64_t k) const { return std::norm(amps_[k]); }

  /// Largest |a_k - b_k|.
  double max_abs_diff(const QState& other) const;

 private:
  QState(int n, std::vector<Complex> amps)
      : n_(n), amps_(std::move(amps)) {}
  friend QState apply_gate(const QState&, const Gate&);
  friend QState apply_circuit(const QState&, const Circuit&);

  int n_;
  std::vector<Complex> amps_;
};

/// Square complex matrix without any unitarity guarantee.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::uint64_t dim)
      : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::uint64_t dim);

  std::uint64_t dim() const { return dim_; }
  Complex& operator()(std::uint64_t r, std::uint64_t c) {
    return data_[r * dim_ + c];
  }
  Complex operator()(std::uint64_t r, std::uint64_t c) const {
    return data_[r * dim_ + c];
  }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

  double max_abs_diff(const ComplexMatrix& other) const;
  /// max |M^dagger M - I| entry.
  double unitarity_error() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::uint64_t dim_ = 0;
  std::vector<Complex> data_;
};

/// 2^n x 2^n unitary in the library's basis convention.
class DenseUnitary {
 public:
  /// Checks ||M^dagger M - I||_max < kStateTol when n <= kVerifyCap and
  /// throws NotUnitary otherwise. Larger matrices come only from builders
  /// whose construction is unitary by formula.
  static DenseUnitary from_matrix(int n, ComplexMatrix m);

  static inline constexpr int kVerifyCap = 10;

  int n() const { return n_; }
  std::uint64_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::uint64_t row, std::uint64_t col) const {
    return m_(row, col);
  }

  DenseUnitary adjoint() const { return {n_, m_.adjoint()}; }
  DenseUnitary conjugate() const { return {n_, m_.conjugate()}; }

  friend bool operator==(const DenseUnitary&, const DenseUnitary&) = default;

 private:
  DenseUnitary(int n, ComplexMatrix m) : n_(n), m_(std::move(m)) {}
  int n_;
  ComplexMatrix m_;
};

/// Returns U_g|state>. Throws IndexError if g touches a qubit >= state.n().
QState apply_gate(const QState& state, const Gate& g);

/// Applies the gates left to right. Throws DimensionError if c.n() differs.
QState apply_circuit(const QState& state, const Circuit& c);

/// Column x is apply_circuit(|x>). Throws CapExceeded above dense_cap().
DenseUnitary circuit_to_dense(const Circuit& c);

/// Matrix-vector product; throws NotUnitary if the norm drifts by more than
/// kStateTol.
QState apply_dense(const QState& state, const DenseUnitary& m);

using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Draws `shots` i.i.d. outcomes from |amps|^2. Deterministic in the seed.
Histogram measure_all(const QState& state, std::uint64_t seed,
                      std::uint64_t shots);

/// Tensor product a (x) b acting as: qubits of `low` are 0..low.n-1, qubits
/// of `high` follow. Matches the library basis convention.
DenseUnitary kron(const DenseUnitary& high, const DenseUnitary& low);

/// Reverses the n-bit string of k.
std::uint64_t reverse_bits(std::uint64_t k, int n);

}  // namespace gqt
