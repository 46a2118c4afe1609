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

#include "gqt/phasemat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>

namespace gqt {

namespace {

std::atomic<int> g_general_cap{16};

bool congruent(double s, double t, double modulus) {
  return wrap_distance(s, t, modulus) < kCongruenceTol;
}

}  // namespace

PhaseMatrix::PhaseMatrix(int n, std::vector<double> entries)
    : n_(n), phi_(std::move(entries)) {
  if (n < 1 || n > kStateCap) {
    throw InvalidInput("phase matrix size must lie in [1, " +
                       std::to_string(kStateCap) + "]");
  }
  if (phi_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidInput("phase matrix needs " + std::to_string(n * n) +
                       " entries, got " + std::to_string(phi_.size()));
  }
  const double bound = std::ldexp(1.0, 2 * n);
  for (double v : phi_) {
    if (!std::isfinite(v)) throw InvalidInput("phase entry is not finite");
    if (std::abs(v) > bound) {
      throw InvalidInput("phase entry " + std::to_string(v) +
                         " exceeds bound 2^(2n)");
    }
  }
}

PhaseMatrix PhaseMatrix::from_rows(
    const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<double> e;
  e.reserve(rows.size() * rows.size());
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw InvalidInput("phase matrix must be square");
    }
    e.insert(e.end(), row.begin(), row.end());
  }
  return PhaseMatrix(n, std::move(e));
}

PhaseMatrix PhaseMatrix::hadamard(int n) {
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) e[i * n + i] = std::ldexp(1.0, n - 1);
  return PhaseMatrix(n, std::move(e));
}

PhaseMatrix PhaseMatrix::with(int i, int j, double value) const {
  std::vector<double> e = phi_;
  e.at(static_cast<std::size_t>(i) * n_ + j) = value;
  return PhaseMatrix(n_, std::move(e));
}

const char* regime_name(Regime r) {
  return r == Regime::kTriangular ? "triangular" : "general";
}

double wrap_distance(double s, double t, double modulus) {
  return std::abs(std::remainder(s - t, modulus));
}

ValidityReport check_triangular(const PhaseMatrix& pm) {
  ValidityReport rep;
  rep.regime = Regime::kTriangular;
  const int n = pm.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const bool ok = i == j ? pm(i, j) == pm.half()
                             : congruent(pm(i, j), 0.0, pm.modulus());
      if (!ok) {
        rep.cell = {i, j};
        rep.detail = i == j ? "diagonal entry differs from 2^(n-1)"
                            : "upper entry is not a multiple of 2^n";
        return rep;
      }
    }
  }
  rep.valid = true;
  return rep;
}

int general_check_cap() { return g_general_cap.load(); }

void set_general_check_cap(int n) {
  if (n < 1 || n > kStateCap) {
    throw InvalidInput("general check cap must lie in [1, " +
                       std::to_string(kStateCap) + "]");
  }
  g_general_cap.store(n);
}

namespace {

// Depth-first walk over row combinations in lexicographic order of their
// sorted row lists. `signed_pass` also assigns -1 to rows after the first;
// only combinations containing a -1 are tested in that pass.
struct CombinationSearch {
  const PhaseMatrix& pm;
  bool signed_pass;
  std::vector<int> coeff;
  std::vector<double> sums;

  bool row_has_half(const std::vector<double>& s) const {
    for (double v : s) {
      if (congruent(v, pm.half(), pm.modulus())) return true;
    }
    return false;
  }

  // Returns true when a failing combination was found (left in `coeff`).
  bool visit(int start, bool has_negative) {
    const int n = pm.n();
    for (int r = start; r < n; ++r) {
      const bool first = std::ranges::all_of(coeff, [](int c) { return c == 0; });
      for (int sign : {1, -1}) {
        if (sign < 0 && (!signed_pass || first)) continue;
        coeff[r] = sign;
        for (int j = 0; j < n; ++j) sums[j] += sign * pm(r, j);
        const bool neg = has_negative || sign < 0;
        if ((!signed_pass || neg) && !row_has_half(sums)) return true;
        if (visit(r + 1, neg)) return true;
        for (int j = 0; j < n; ++j) sums[j] -= sign * pm(r, j);
        coeff[r] = 0;
      }
    }
    return false;
  }
};

std::optional<std::vector<int>> find_failing(const PhaseMatrix& pm,
                                             bool include_signed) {
  const int n = pm.n();
  for (bool signed_pass : {false, true}) {
    if (signed_pass && !include_signed) break;
    CombinationSearch search{pm, signed_pass, std::vector<int>(n, 0),
                             std::vector<double>(n, 0.0)};
    if (search.visit(0, false)) return search.coeff;
  }
  return std::nullopt;
}

ValidityReport general_report(const PhaseMatrix& pm, bool include_signed) {
  if (pm.n() > general_check_cap()) {
    throw CapExceeded("check_general: n = " + std::to_string(pm.n()) +
                      " exceeds cap " + std::to_string(general_check_cap()));
  }
  ValidityReport rep;
  rep.regime = Regime::kGeneral;
  rep.combination = find_failing(pm, include_signed);
  rep.valid = !rep.combination.has_value();
  if (!rep.valid) {
    rep.detail = "no column of the combined rows is congruent to 2^(n-1)";
  }
  return rep;
}

}  // namespace

ValidityReport check_general(const PhaseMatrix& pm) {
  return general_report(pm, true);
}

ValidityReport check_unsigned_subsets(const PhaseMatrix& pm) {
  return general_report(pm, false);
}

Complex a_of_z(const PhaseMatrix& pm, std::span<const int> z) {
  const int n = pm.n();
  if (z.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("a_of_z: z has wrong length");
  }
  for (int v : z) {
    if (v < -1 || v > 1) throw InvalidInput("a_of_z: z entries must be in {-1,0,1}");
  }
  const double modulus = pm.modulus();
  Complex prod = 1.0;
  for (int j = 0; j < n; ++j) {
    double zt = 0.0;
    for (int i = 0; i < n; ++i) zt += z[i] * pm(i, j);
    const double angle =
        2.0 * std::numbers::pi * std::remainder(zt, modulus) / modulus;
    prod *= Complex(1.0, 0.0) + std::polar(1.0, angle);
  }
  return prod / modulus;
}

bool consistency_unitary(const PhaseMatrix& pm, double tol) {
  const int n = pm.n();
  require_dense(n, "consistency_unitary");
  std::vector<int> z(n, -1);
  // Odometer over {-1, 0, 1}^n.
  while (true) {
    const bool zero = std::ranges::all_of(z, [](int v) { return v == 0; });
    const Complex a = a_of_z(pm, z);
    if (zero ? std::abs(a - 1.0) >= tol : std::abs(a) >= tol) return false;
    int k = 0;
    while (k < n && z[k] == 1) z[k++] = -1;
    if (k == n) break;
    ++z[k];
  }
  return true;
}

PhaseMatrix transpose_row_into_column(const PhaseMatrix& pm, int r) {
  const int n = pm.n();
  if (r < 0 || r >= n) throw IndexError("row out of range");
  std::vector<double> e(pm.entries().begin(), pm.entries().end());
  for (int j = 0; j < r; ++j) {
    e[j * n + r] = pm(r, j);
    e[r * n + j] = 0.0;
  }
  return PhaseMatrix(n, std::move(e));
}

PhaseMatrix normalize_upper(const PhaseMatrix& pm) {
  const int n = pm.n();
  std::vector<double> e(pm.entries().begin(), pm.entries().end());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (congruent(pm(i, j), 0.0, pm.modulus())) e[i * n + j] = 0.0;
    }
  }
  return PhaseMatrix(n, std::move(e));
}

}  // namespace gqt
