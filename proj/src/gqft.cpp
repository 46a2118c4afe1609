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

#include "gqt/gqft.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace gqt {

namespace {

double angle_of(double exponent, double modulus) {
  return 2.0 * std::numbers::pi * std::remainder(exponent, modulus) / modulus;
}

int support_cap(const GqftSpec& spec) {
  return spec.row_support_cap < 0 ? default_row_support_cap(spec.pm.n())
                                  : spec.row_support_cap;
}

const RowFunction* row_function(const GqftSpec& spec, int i) {
  for (const RowFunction& rf : spec.row_fns) {
    if (rf.i == i) return &rf;
  }
  return nullptr;
}

const CellFunction* cell_function(const GqftSpec& spec, int i, int j) {
  for (const CellFunction& cf : spec.cell_fns) {
    if (cf.i == i && cf.j == j) return &cf;
  }
  return nullptr;
}

void check_structure(const GqftSpec& spec) {
  const int n = spec.pm.n();
  const bool has_fns = !spec.cell_fns.empty() || !spec.row_fns.empty();
  if (has_fns && spec.regime != Regime::kTriangular) {
    throw InvalidInput("phase functions require the triangular regime");
  }
  std::set<std::pair<int, int>> cells;
  for (const CellFunction& cf : spec.cell_fns) {
    if (cf.j < 0 || cf.i >= n || cf.i <= cf.j) {
      throw InvalidInput("cell function must sit strictly below the diagonal");
    }
    if (cf.f0 != 0.0) {
      throw InvalidInput("cell function value at 0 must be 0");
    }
    if (!std::isfinite(cf.f1)) throw InvalidInput("cell function not finite");
    if (!cells.insert({cf.i, cf.j}).second) {
      throw InvalidInput("duplicate cell function");
    }
  }
  std::set<int> rows;
  for (const RowFunction& rf : spec.row_fns) {
    if (rf.i < 1 || rf.i >= n) {
      throw InvalidInput("row function row must lie in [1, n)");
    }
    if (!rows.insert(rf.i).second) throw InvalidInput("duplicate row function");
    if (static_cast<int>(rf.table.size()) > support_cap(spec)) {
      throw InvalidInput("row function support " +
                         std::to_string(rf.table.size()) + " exceeds cap " +
                         std::to_string(support_cap(spec)));
    }
    std::set<std::uint64_t> patterns;
    for (const auto& [pattern, value] : rf.table) {
      if (pattern >= dim_of(rf.i)) {
        throw InvalidInput("row function pattern out of range");
      }
      if (pattern == 0 && value != 0.0) {
        throw InvalidInput("row function value at the zero pattern must be 0");
      }
      if (!std::isfinite(value)) throw InvalidInput("row function not finite");
      if (!patterns.insert(pattern).second) {
        throw InvalidInput("duplicate row function pattern");
      }
    }
    for (const CellFunction& cf : spec.cell_fns) {
      if (cf.i == rf.i) {
        throw InvalidInput("row " + std::to_string(rf.i) +
                           " has both a row function and cell functions");
      }
    }
  }
}

// Phi_i(x): coefficient of y_i in the exponent.
double row_exponent(const GqftSpec& spec, int i, std::uint64_t x) {
  const int n = spec.pm.n();
  double acc = 0.0;
  for (int j = i; j < n; ++j) {
    if ((x >> j) & 1U) acc += spec.pm(i, j);
  }
  if (const RowFunction* rf = row_function(spec, i)) {
    const std::uint64_t pattern = x & (dim_of(i) - 1);
    for (const auto& [p, value] : rf->table) {
      if (p == pattern) acc += value;
    }
    return acc;
  }
  for (int j = 0; j < i; ++j) {
    const bool bit = (x >> j) & 1U;
    if (const CellFunction* cf = cell_function(spec, i, j)) {
      acc += bit ? cf->f1 : cf->f0;
    } else if (bit) {
      acc += spec.pm(i, j);
    }
  }
  return acc;
}

}  // namespace

ValidityReport validate(const GqftSpec& spec) {
  check_structure(spec);
  return spec.regime == Regime::kTriangular ? check_triangular(spec.pm)
                                            : check_general(spec.pm);
}

double phase_exponent(const GqftSpec& spec, std::uint64_t y,
                      std::uint64_t x) {
  double acc = 0.0;
  for (int i = 0; i < spec.pm.n(); ++i) {
    if ((y >> i) & 1U) acc += row_exponent(spec, i, x);
  }
  return acc;
}

DenseUnitary gqft_dense(const GqftSpec& spec) {
  const int n = spec.pm.n();
  require_dense(n, "gqft_dense");
  ValidityReport rep = validate(spec);
  if (!rep.valid) throw InvalidSpec(std::move(rep));
  const std::uint64_t dim = dim_of(n);
  const double modulus = spec.pm.modulus();
  const double scale = 1.0 / std::sqrt(modulus);
  // Row exponents depend on x only; tabulate them once per column.
  ComplexMatrix m(dim);
  std::vector<double> phi_rows(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int i = 0; i < n; ++i) phi_rows[i] = row_exponent(spec, i, x);
    for (std::uint64_t y = 0; y < dim; ++y) {
      double e = 0.0;
      for (int i = 0; i < n; ++i) {
        if ((y >> i) & 1U) e += phi_rows[i];
      }
      m(y, x) = std::polar(scale, angle_of(e, modulus));
    }
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

ComplexMatrix phase_transform_matrix(const PhaseMatrix& pm) {
  const int n = pm.n();
  require_dense(n, "phase_transform_matrix");
  const std::uint64_t dim = dim_of(n);
  const double modulus = pm.modulus();
  const double scale = 1.0 / std::sqrt(modulus);
  ComplexMatrix m(dim);
  for (std::uint64_t y = 0; y < dim; ++y) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      double e = 0.0;
      for (int i = 0; i < n; ++i) {
        if (!((y >> i) & 1U)) continue;
        for (int j = 0; j < n; ++j) {
          if ((x >> j) & 1U) e += pm(i, j);
        }
      }
      m(y, x) = std::polar(scale, angle_of(e, modulus));
    }
  }
  return m;
}

Circuit gqft_circuit(const GqftSpec& spec) {
  if (spec.regime != Regime::kTriangular) {
    throw UnsupportedRegime(
        "gqft_circuit: no circuit construction for the general regime");
  }
  ValidityReport rep = validate(spec);
  if (!rep.valid) throw InvalidSpec(std::move(rep));
  const int n = spec.pm.n();
  const double modulus = spec.pm.modulus();
  Circuit c(n);
  // Wires are finished top-down so every control wire j < i still holds x_j.
  for (int i = n - 1; i >= 0; --i) {
    c.add(Gate::single(i, mat2::hadamard(), "H"));
    if (const RowFunction* rf = row_function(spec, i)) {
      auto table = rf->table;
      std::ranges::sort(table);
      for (const auto& [pattern, value] : table) {
        if (std::remainder(value, modulus) == 0.0) continue;
        std::vector<Control> ctrls;
        for (int j = 0; j < i; ++j) {
          ctrls.push_back({j, static_cast<int>((pattern >> j) & 1U)});
        }
        c.add(Gate::controlled(std::move(ctrls), i,
                               mat2::phase(angle_of(value, modulus)), "T"));
      }
      continue;
    }
    for (int j = i - 1; j >= 0; --j) {
      const CellFunction* cf = cell_function(spec, i, j);
      const double phi = cf ? cf->f1 : spec.pm(i, j);
      if (std::remainder(phi, modulus) == 0.0) continue;
      c.add(Gate::controlled({{j, 1}}, i, mat2::phase(angle_of(phi, modulus)),
                             "T"));
    }
  }
  return c;
}

std::size_t gqft_gate_bound(const GqftSpec& spec) {
  const std::size_t n = spec.pm.n();
  std::size_t bound = n * (n + 1) / 2 + 2 * n;
  for (const RowFunction& rf : spec.row_fns) {
    const std::size_t cells = static_cast<std::size_t>(rf.i);
    if (rf.table.size() > cells) bound += rf.table.size() - cells;
  }
  return bound;
}

PhaseMatrix toeplitz_phi(int n) {
  if (n < 1) throw InvalidInput("toeplitz_phi: n must be >= 1");
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e[i * n + j] = std::ldexp(1.0, n - 1 - i + j);
  }
  return PhaseMatrix(n, std::move(e));
}

DenseUnitary dft_dense(int n) {
  require_dense(n, "dft_dense");
  const std::uint64_t dim = dim_of(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix m(dim);
  for (std::uint64_t y = 0; y < dim; ++y) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      const std::uint64_t e = (x * y) & (dim - 1);
      m(y, x) = std::polar(scale, 2.0 * std::numbers::pi *
                                      static_cast<double>(e) /
                                      static_cast<double>(dim));
    }
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

Circuit dft_circuit(int n) {
  Circuit c = gqft_circuit(GqftSpec(toeplitz_phi(n)));
  for (int k = 0; k < n / 2; ++k) c.add(Gate::swap(k, n - 1 - k));
  return c;
}

}  // namespace gqt
