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

// Quantum Haar transform.
//
// The Haar matrix follows the Kronecker recursion
//
//   A_2 = [[1, 1], [1, -1]],
//   A_{2^n} = [ A_{2^{n-1}} (x) [1, 1] ; I_{2^{n-1}} (x) [1, -1] ],
//
// and P_{2^n} is A_{2^n} with every row scaled to unit length.
//
// Closed forms here are written over register slots |r_0, ..., r_{n-1}>.
// The Kronecker recursion makes slot 0 the most significant bit of the
// matrix index: index = sum_k r_k 2^{n-1-k}. Circuits map slot k to qubit
// n-1-k so that QState indices and matrix indices coincide.

#include <cstdint>
#include <span>
#include <vector>

#include "gqt/qstate.hpp"

namespace gqt {

class HaarMatrix {
 public:
  HaarMatrix(int n, std::vector<int> a);

  int n() const { return n_; }
  std::uint64_t dim() const { return dim_of(n_); }
  /// Unnormalized entry, in {-1, 0, 1}.
  int a(std::uint64_t row, std::uint64_t col) const {
    return a_[row * dim() + col];
  }
  /// Row-normalized entry.
  double p(std::uint64_t row, std::uint64_t col) const {
    return p_[row * dim() + col];
  }
  std::span<const int> a_entries() const { return a_; }

  /// Copy with one unnormalized entry replaced (p is recomputed).
  HaarMatrix with_a(std::uint64_t row, std::uint64_t col, int value) const;

  DenseUnitary p_unitary() const;

 private:
  int n_;
  std::vector<int> a_;
  std::vector<double> p_;
};

HaarMatrix haar_matrix(int n);

/// Matrix index of register slots (r_0 most significant).
std::uint64_t slots_to_index(std::span<const int> slots);
std::vector<int> index_to_slots(int n, std::uint64_t index);

/// Index of |0>^{n-i-1} |1> |x_0, ..., x_{i-1}>, where `prefix` holds
/// x_0 .. x_{i-1} with x_0 most significant.
std::uint64_t level_ket_index(int i, std::uint64_t prefix);

/// |0>^n + sum_i (-1)^{x_i} |0>^{n-i-1}|1>|x_0..x_{i-1}>, as an integer
/// vector over matrix indices. `x` is a matrix (column) index.
std::vector<int> haar_identity_column(int n, std::uint64_t x);

/// True iff column x of h.a equals haar_identity_column exactly.
bool haar_matrix_identity_check(const HaarMatrix& h, std::uint64_t x);

/// P|x> from the closed form; n + 1 nonzero amplitudes.
QState haar_apply_basis(int n, std::uint64_t x);

/// Either |0>^n (level = -1) or |0>^{n-i-1}|1>|x_0..x_{i-1}> (level = i).
/// Every basis ket has exactly one such description.
struct HaarKet {
  int level = -1;
  std::uint64_t prefix = 0;
  friend bool operator==(const HaarKet&, const HaarKet&) = default;
};

HaarKet haar_ket_of_index(int n, std::uint64_t index);
std::uint64_t haar_ket_index(int n, const HaarKet& ket);

/// P^dagger applied to the described ket, from the closed form:
/// |x_0..x_{i-1}>|->(sum over the trailing slots)/sqrt(2^{n-i-1}), or the
/// uniform superposition for |0>^n. Throws IndexError on a bad descriptor.
QState haar_inverse_apply(int n, const HaarKet& ket);

/// Circuit taking |0>^{n-i-1}|1>|x_0..x_{i-1}> to haar_inverse_apply of it:
/// (i+1)(n-i-1)+i adjacent swaps moving the prefix to the front, a |1> to
/// |-> map on slot i (label "M"), and Hadamards on slots i+1..n-1.
Circuit haar_inverse_circuit(int n, int i);

}  // namespace gqt
