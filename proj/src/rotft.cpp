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

#include "gqt/rotft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <set>

namespace gqt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

bool in_range(double a) { return std::isfinite(a) && a >= 0.0 && a < kTwoPi; }

void require_variant(const RotSpec& spec, RotVariant v, const char* what) {
  if (spec.variant() != v) {
    throw InvalidInput(std::string(what) + ": spec has variant " +
                       variant_name(spec.variant()));
  }
}

// Controlled rotations feeding wire i: R(theta(0)) unconditionally, then the
// difference R(theta(1) - theta(0)) when the control is 1. Rotations about
// one axis add, so this realizes R(theta_ik(x_k)).
void add_cascade(Circuit& c, const RotSpec& spec, int i) {
  for (int k = 0; k < i; ++k) {
    const double t0 = spec.theta(i, k, 0);
    const double t1 = spec.theta(i, k, 1);
    if (t0 != 0.0) c.add(Gate::single(i, mat2::rotation(t0), "R"));
    if (t1 != t0) {
      c.add(Gate::controlled({{k, 1}}, i, mat2::rotation(t1 - t0), "R"));
    }
  }
}

}  // namespace

const char* variant_name(RotVariant v) {
  return v == RotVariant::kHadamardFirst ? "hadamard_first" : "rotation_first";
}

RotSpec::RotSpec(int n, RotVariant variant, std::vector<ThetaEntry> thetas,
                 std::vector<double> alpha0)
    : n_(n),
      variant_(variant),
      thetas_(std::move(thetas)),
      alpha0_(std::move(alpha0)) {
  if (n < 1 || n > kStateCap) throw InvalidInput("RotSpec: bad qubit count");
  table_.assign(static_cast<std::size_t>(n) * n * 2, 0.0);
  std::set<std::pair<int, int>> seen;
  for (const ThetaEntry& t : thetas_) {
    if (t.j < 0 || t.i >= n || t.j >= t.i) {
      throw InvalidInput("RotSpec: theta index must satisfy 0 <= j < i < n");
    }
    if (!in_range(t.t0) || !in_range(t.t1)) {
      throw InvalidInput("RotSpec: theta values must lie in [0, 2 pi)");
    }
    if (!seen.insert({t.i, t.j}).second) {
      throw InvalidInput("RotSpec: duplicate theta entry");
    }
    table_[(t.i * n + t.j) * 2] = t.t0;
    table_[(t.i * n + t.j) * 2 + 1] = t.t1;
  }
  if (variant == RotVariant::kRotationFirst) {
    if (alpha0_.size() != static_cast<std::size_t>(n)) {
      throw InvalidInput("RotSpec: rotation_first needs n alpha0 values");
    }
    for (double a : alpha0_) {
      if (!in_range(a)) {
        throw InvalidInput("RotSpec: alpha0 values must lie in [0, 2 pi)");
      }
    }
  } else if (!alpha0_.empty()) {
    throw InvalidInput("RotSpec: hadamard_first takes no alpha0 values");
  }
}

double RotSpec::theta(int i, int j, int bit) const {
  return table_[(i * n_ + j) * 2 + bit];
}

double RotSpec::alpha(int j, int bit) const {
  return alpha0_.at(j) - (bit ? std::numbers::pi / 2.0 : 0.0);
}

double RotSpec::big_theta(int j, std::uint64_t x) const {
  double acc = 0.0;
  for (int k = 0; k < j; ++k) acc += theta(j, k, (x >> k) & 1U);
  return reduce_angle(acc);
}

double RotSpec::psi(int j, std::uint64_t x) const {
  return reduce_angle(alpha(j, (x >> j) & 1U) + big_theta(j, x));
}

DenseUnitary rot1_dense(const RotSpec& spec) {
  require_variant(spec, RotVariant::kHadamardFirst, "rot1_dense");
  const int n = spec.n();
  require_dense(n, "rot1_dense");
  const std::uint64_t dim = dim_of(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  ComplexMatrix m(dim);
  std::vector<double> c(n), s(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int j = 1; j < n; ++j) {
      const double t = spec.big_theta(j, x);
      c[j] = std::cos(t);
      s[j] = std::sin(t);
    }
    for (std::uint64_t y = 0; y < dim; ++y) {
      double v = (std::popcount(x & y) & 1) ? -scale : scale;
      for (int j = 1; j < n; ++j) {
        const bool flip = (((x ^ y) >> j) & 1U) != 0;
        v *= flip ? c[j] - s[j] : c[j] + s[j];
      }
      m(y, x) = v;
    }
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

Circuit rot1_circuit(const RotSpec& spec) {
  require_variant(spec, RotVariant::kHadamardFirst, "rot1_circuit");
  Circuit c(spec.n());
  for (int i = spec.n() - 1; i >= 0; --i) {
    c.add(Gate::single(i, mat2::hadamard(), "H"));
    add_cascade(c, spec, i);
  }
  return c;
}

DenseUnitary rot2_dense(const RotSpec& spec) {
  require_variant(spec, RotVariant::kRotationFirst, "rot2_dense");
  const int n = spec.n();
  require_dense(n, "rot2_dense");
  const std::uint64_t dim = dim_of(n);
  ComplexMatrix m(dim);
  std::vector<double> c(n), s(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int j = 0; j < n; ++j) {
      const double p = spec.psi(j, x);
      c[j] = std::cos(p);
      s[j] = std::sin(p);
    }
    for (std::uint64_t y = 0; y < dim; ++y) {
      double v = 1.0;
      // cos(p + pi/2) = -sin p
      for (int j = 0; j < n; ++j) v *= ((y >> j) & 1U) ? -s[j] : c[j];
      m(y, x) = v;
    }
  }
  return DenseUnitary::from_matrix(n, std::move(m));
}

ComplexMatrix rot2_exponential_form(const RotSpec& spec) {
  require_variant(spec, RotVariant::kRotationFirst, "rot2_exponential_form");
  const int n = spec.n();
  require_dense(n, "rot2_exponential_form");
  const std::uint64_t dim = dim_of(n);
  const double scale = std::ldexp(1.0, -n);
  ComplexMatrix m(dim);
  std::vector<double> psi(n);
  for (std::uint64_t x = 0; x < dim; ++x) {
    for (int j = 0; j < n; ++j) psi[j] = spec.psi(j, x);
    for (std::uint64_t y = 0; y < dim; ++y) {
      Complex acc = 0.0;
      for (std::uint64_t k = 0; k < dim; ++k) {
        double arg = 0.0;
        for (int j = 0; j < n; ++j) {
          const double a = psi[j] + std::numbers::pi * ((y >> j) & 1U) / 2.0;
          arg += ((k >> j) & 1U) ? -a : a;
        }
        acc += std::polar(1.0, arg);
      }
      m(y, x) = acc * scale;
    }
  }
  return m;
}

Circuit rot2_circuit(const RotSpec& spec) {
  require_variant(spec, RotVariant::kRotationFirst, "rot2_circuit");
  Circuit c(spec.n());
  for (int i = spec.n() - 1; i >= 0; --i) {
    // R(alpha_i(0)) sends |0> to cos a|0> - sin a|1> and |1> to
    // sin a|0> + cos a|1> = cos(a - pi/2)|0> - sin(a - pi/2)|1>.
    c.add(Gate::single(i, mat2::rotation(spec.alpha(i, 0)), "A"));
    add_cascade(c, spec, i);
  }
  return c;
}

}  // namespace gqt
