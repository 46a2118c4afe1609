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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gqt/qstate.hpp"

namespace gqt {

/// Tolerance for real-valued congruences mod N.
inline constexpr double kCongruenceTol = 1e-9;

/// n x n real matrix of phase exponents. Entry phi(i, j) contributes the
/// factor exp(2 pi i * phi(i, j) * y_i * x_j / N), N = 2^n, to matrix
/// element (y, x) of the induced transform.
class PhaseMatrix {
 public:
  /// Row-major entries. Throws InvalidInput for a wrong entry count, a
  /// non-finite entry, or |entry| > 2^(2n).
  PhaseMatrix(int n, std::vector<double> entries);
  static PhaseMatrix from_rows(const std::vector<std::vector<double>>& rows);
  /// 2^(n-1) on the diagonal, zero elsewhere.
  static PhaseMatrix hadamard(int n);

  int n() const { return n_; }
  /// N = 2^n.
  double modulus() const { return static_cast<double>(dim_of(n_)); }
  double half() const { return modulus() / 2.0; }
  double operator()(int i, int j) const { return phi_[i * n_ + j]; }
  std::span<const double> entries() const { return phi_; }

  PhaseMatrix with(int i, int j, double value) const;

  friend bool operator==(const PhaseMatrix&, const PhaseMatrix&) = default;

 private:
  int n_;
  std::vector<double> phi_;
};

enum class Regime { kTriangular, kGeneral };

const char* regime_name(Regime r);

struct ValidityReport {
  Regime regime = Regime::kTriangular;
  bool valid = false;
  /// Failing (row, column) cell, triangular regime only.
  std::optional<std::pair<int, int>> cell;
  /// Failing row combination, general regime only: one coefficient per row
  /// in {-1, 0, 1}. Pure {0, 1} vectors are the row subsets of the
  /// unsigned criterion.
  std::optional<std::vector<int>> combination;
  std::string detail;
};

/// A spec failed its regime validator; carries the diagnostic report.
class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(ValidityReport report)
      : Error(std::string("invalid phase matrix (") +
              regime_name(report.regime) + " regime): " + report.detail),
        report_(std::move(report)) {}
  const ValidityReport& report() const { return report_; }

 private:
  ValidityReport report_;
};

/// min over integers k of |s - t - k*modulus|.
double wrap_distance(double s, double t, double modulus);

/// Diagonal exactly 2^(n-1); strictly-upper entries congruent to 0 mod N;
/// strictly-lower entries free. Witness: first failing cell, row-major.
ValidityReport check_triangular(const PhaseMatrix& pm);

/// Largest n accepted by check_general.
int general_check_cap();
void set_general_check_cap(int n);

/// Exact unitarity criterion for the induced transform: every nonzero
/// combination c in {-1,0,1}^n of rows has a column j with
/// (c Phi)_j = N/2 mod N. Plain row subsets are tried first (in
/// lexicographic order of their sorted row lists), then combinations with
/// negative coefficients; the witness is the first failure.
ValidityReport check_general(const PhaseMatrix& pm);

/// The weaker test over plain row subsets only. Necessary for unitarity but
/// not sufficient when entries are not integers of suitable parity.
ValidityReport check_unsigned_subsets(const PhaseMatrix& pm);

/// A(z) = (1/N) sum_x w_N^{z Phi x^T}, evaluated through the product form
/// (1/N) prod_j (1 + w_N^{(z Phi)_j}). Entries of z must lie in {-1, 0, 1}.
Complex a_of_z(const PhaseMatrix& pm, std::span<const int> z);

/// True iff A(0) = 1 and |A(z)| < tol for every nonzero z in {-1,0,1}^n.
bool consistency_unitary(const PhaseMatrix& pm, double tol = kCongruenceTol);

/// Moves the strictly-lower part of row r into column r above the diagonal
/// (phi'(j, r) = phi(r, j), phi'(r, j) = 0 for j < r).
PhaseMatrix transpose_row_into_column(const PhaseMatrix& pm, int r);

/// Replaces strictly-upper entries congruent to 0 mod N with exact zeros.
PhaseMatrix normalize_upper(const PhaseMatrix& pm);

/// Default support cap for per-row phase tables.
inline int default_row_support_cap(int n) { return n; }

}  // namespace gqt
