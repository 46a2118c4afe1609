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

// Independent oracles and random generators for the test suites. Nothing here
// calls into the library code under test except for value types.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "gqt/gqft.hpp"
#include "gqt/phasemat.hpp"
#include "gqt/qstate.hpp"
#include "gqt/rng.hpp"
#include "gqt/rotft.hpp"

namespace gqt::testing {

using CMat = std::vector<std::vector<Complex>>;

inline Complex unit_phase(double turns) {
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

inline int bit(std::uint64_t v, int k) { return static_cast<int>((v >> k) & 1U); }

// (1/sqrt N) w^{y Phi x^T}, summed term by term over bit pairs.
inline CMat brute_gqft(const PhaseMatrix& pm) {
  const int n = pm.n();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double N = static_cast<double>(dim);
  CMat m(dim, std::vector<Complex>(dim));
  for (std::uint64_t y = 0; y < dim; ++y) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      Complex acc = 1.0 / std::sqrt(N);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (bit(y, i) && bit(x, j)) acc *= unit_phase(pm(i, j) / N);
        }
      }
      m[y][x] = acc;
    }
  }
  return m;
}

// (1/N) sum_x w^{z Phi x^T} for z in {-1, 0, 1}^n.
inline Complex brute_a_of_z(const PhaseMatrix& pm, const std::vector<int>& z) {
  const int n = pm.n();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double N = static_cast<double>(dim);
  Complex acc = 0.0;
  for (std::uint64_t x = 0; x < dim; ++x) {
    double e = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) e += z[i] * pm(i, j) * bit(x, j);
    }
    acc += unit_phase(e / N);
  }
  return acc / N;
}

inline double gram_error(const CMat& m) {
  const std::size_t dim = m.size();
  double worst = 0.0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      Complex acc = 0.0;
      for (std::size_t r = 0; r < dim; ++r) acc += std::conj(m[r][a]) * m[r][b];
      worst = std::max(worst, std::abs(acc - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

inline bool numerically_unitary(const PhaseMatrix& pm, double tol = 1e-9) {
  return gram_error(brute_gqft(pm)) < tol;
}

inline CMat dft_oracle(int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double N = static_cast<double>(dim);
  CMat m(dim, std::vector<Complex>(dim));
  for (std::uint64_t y = 0; y < dim; ++y) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      m[y][x] = unit_phase(static_cast<double>((x * y) % dim) / N) / std::sqrt(N);
    }
  }
  return m;
}

inline CMat hadamard_power(int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  CMat m(dim, std::vector<Complex>(dim));
  for (std::uint64_t y = 0; y < dim; ++y) {
    for (std::uint64_t x = 0; x < dim; ++x) {
      m[y][x] = (std::popcount(x & y) % 2 ? -s : s);
    }
  }
  return m;
}

inline std::uint64_t reversed(std::uint64_t v, int n) {
  std::uint64_t r = 0;
  for (int k = 0; k < n; ++k) r |= static_cast<std::uint64_t>(bit(v, k)) << (n - 1 - k);
  return r;
}

inline double max_diff(const DenseUnitary& u, const CMat& m) {
  double worst = 0.0;
  for (std::uint64_t r = 0; r < u.dim(); ++r) {
    for (std::uint64_t c = 0; c < u.dim(); ++c) {
      worst = std::max(worst, std::abs(u(r, c) - m[r][c]));
    }
  }
  return worst;
}

inline double max_diff(const DenseUnitary& a, const DenseUnitary& b) {
  return a.matrix().max_abs_diff(b.matrix());
}

// Integer Haar matrix built directly from the Kronecker recursion.
inline std::vector<std::vector<int>> haar_oracle(int n) {
  std::vector<std::vector<int>> a{{1, 1}, {1, -1}};
  for (int level = 2; level <= n; ++level) {
    const std::size_t half = a.size();
    std::vector<std::vector<int>> next(2 * half, std::vector<int>(2 * half, 0));
    for (std::size_t r = 0; r < half; ++r) {
      for (std::size_t c = 0; c < half; ++c) {
        next[r][2 * c] = a[r][c];
        next[r][2 * c + 1] = a[r][c];
      }
      next[half + r][2 * r] = 1;
      next[half + r][2 * r + 1] = -1;
    }
    a = std::move(next);
  }
  return a;
}

inline double uniform_in(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform();
}

// Condition-(4) matrix: free lower triangle, upper entries multiples of N.
inline PhaseMatrix random_triangular(int n, Rng& rng, bool integer_lower = false) {
  const double N = std::ldexp(1.0, n);
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        e[i * n + j] = N / 2;
      } else if (i < j) {
        e[i * n + j] = N * static_cast<double>(static_cast<int>(rng.below(5)) - 2);
      } else {
        e[i * n + j] = integer_lower ? static_cast<double>(rng.below(2 * static_cast<std::uint64_t>(N)))
                                     : uniform_in(rng, -N, N);
      }
    }
  }
  return PhaseMatrix(n, std::move(e));
}

inline PhaseMatrix random_real(int n, Rng& rng) {
  const double N = std::ldexp(1.0, n);
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (double& v : e) v = uniform_in(rng, 0.0, N);
  return PhaseMatrix(n, std::move(e));
}

inline RotSpec random_rot(int n, RotVariant variant, Rng& rng) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<ThetaEntry> thetas;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (rng.below(4) == 0) continue;  // leave some entries at zero
      thetas.push_back({i, j, uniform_in(rng, 0, two_pi), uniform_in(rng, 0, two_pi)});
    }
  }
  std::vector<double> alpha0;
  if (variant == RotVariant::kRotationFirst) {
    for (int j = 0; j < n; ++j) alpha0.push_back(uniform_in(rng, 0, two_pi));
  }
  return RotSpec(n, variant, std::move(thetas), std::move(alpha0));
}

}  // namespace gqt::testing
