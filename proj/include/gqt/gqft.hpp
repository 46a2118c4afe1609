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

// Generalized Fourier transform G_N with phase matrix Phi:
//
//   G_N |x> = (1/sqrt N) sum_y w_N^{y Phi x^T} |y>,   w_N = exp(2 pi i / N).
//
// In the triangular regime G_N has a circuit of one Hadamard per wire plus
// one controlled phase per nonzero strictly-lower entry of Phi.

#include <cstdint>
#include <utility>
#include <vector>

#include "gqt/phasemat.hpp"
#include "gqt/qstate.hpp"

namespace gqt {

/// Replaces phi(i, j) * x_j (i > j) by f(x_j). f(0) must be 0.
struct CellFunction {
  int i = 0;
  int j = 0;
  double f0 = 0.0;
  double f1 = 0.0;
};

/// Replaces sum_{j<i} phi(i, j) x_j by a table over the bit pattern
/// (x_0, ..., x_{i-1}); patterns absent from the table contribute 0.
struct RowFunction {
  int i = 0;
  /// (pattern, value); pattern bit j is x_j.
  std::vector<std::pair<std::uint64_t, double>> table;
};

struct GqftSpec {
  PhaseMatrix pm;
  Regime regime = Regime::kTriangular;
  std::vector<CellFunction> cell_fns;
  std::vector<RowFunction> row_fns;
  /// Maximum table size per row function.
  int row_support_cap = -1;  // -1: default_row_support_cap(n)

  explicit GqftSpec(PhaseMatrix m, Regime r = Regime::kTriangular)
      : pm(std::move(m)), regime(r) {}
};

/// Runs the regime validator and the structural checks on phase functions.
/// Structural problems throw InvalidInput; a failed regime check is
/// returned in the report.
ValidityReport validate(const GqftSpec& spec);

/// Sum_i y_i Phi_i(x): the phase exponent of entry (y, x), in units of
/// 2 pi / N, before reduction.
double phase_exponent(const GqftSpec& spec, std::uint64_t y, std::uint64_t x);

/// Dense G_N. Throws InvalidSpec when the regime validator fails and
/// CapExceeded above the dense cap.
DenseUnitary gqft_dense(const GqftSpec& spec);

/// (1/sqrt N) w_N^{y Phi x^T} for an arbitrary Phi, with no validity check.
ComplexMatrix phase_transform_matrix(const PhaseMatrix& pm);

/// Gate-level G_N: for wire i = n-1 down to 0, a Hadamard followed by the
/// controlled phases fed by wires j < i. Triangular regime only.
Circuit gqft_circuit(const GqftSpec& spec);

/// Ceiling on gqft_circuit(spec).size(): n(n+1)/2 + 2n, plus the table
/// entries by which a row function exceeds the i cells it replaces.
std::size_t gqft_gate_bound(const GqftSpec& spec);

/// phi(i, j) = 2^(n-1-i+j). Its transform is the DFT with the output
/// register bit-reversed.
PhaseMatrix toeplitz_phi(int n);

/// Standard DFT, M[y][x] = w_N^{xy} / sqrt N.
DenseUnitary dft_dense(int n);

/// gqft_circuit(toeplitz_phi(n)) followed by the swaps reversing the wire
/// order; equals dft_dense(n).
Circuit dft_circuit(int n);

}  // namespace gqt
