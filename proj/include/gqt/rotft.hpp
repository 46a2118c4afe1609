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

// Rotation-cascade transforms. Wire j carries a rotation whose angle is a
// sum of per-control contributions theta_jk(x_k), k < j, with
//
//   R(t) = [[cos t, sin t], [-sin t, cos t]].
//
// HadamardFirst: H on every wire, then R(Theta_j), Theta_j = sum_k theta_jk.
// RotationFirst: R(alpha_j(x_j)) on every wire, alpha_j(1) = alpha_j(0) -
// pi/2, then the same controlled rotations; Psi_j = alpha_j + Theta_j.

#include <cstdint>
#include <vector>

#include "gqt/qstate.hpp"

namespace gqt {

enum class RotVariant { kHadamardFirst, kRotationFirst };

const char* variant_name(RotVariant v);

/// theta_ij(0) = t0, theta_ij(1) = t1 for wire i controlled by wire j < i.
struct ThetaEntry {
  int i = 0;
  int j = 0;
  double t0 = 0.0;
  double t1 = 0.0;
  friend bool operator==(const ThetaEntry&, const ThetaEntry&) = default;
};

class RotSpec {
 public:
  /// Entries absent from `thetas` are zero. alpha0 must have n entries for
  /// RotationFirst and be empty for HadamardFirst. All angles in [0, 2 pi).
  RotSpec(int n, RotVariant variant, std::vector<ThetaEntry> thetas,
          std::vector<double> alpha0 = {});

  int n() const { return n_; }
  RotVariant variant() const { return variant_; }
  const std::vector<ThetaEntry>& thetas() const { return thetas_; }
  const std::vector<double>& alpha0() const { return alpha0_; }

  double theta(int i, int j, int bit) const;
  /// alpha_j(bit); alpha_j(1) is always alpha_j(0) - pi/2.
  double alpha(int j, int bit) const;

  /// Theta_j(x) reduced to [0, 2 pi).
  double big_theta(int j, std::uint64_t x) const;
  /// Psi_j(x) = alpha_j(x_j) + Theta_j(x), reduced to [0, 2 pi).
  double psi(int j, std::uint64_t x) const;

 private:
  int n_;
  RotVariant variant_;
  std::vector<ThetaEntry> thetas_;
  std::vector<double> alpha0_;
  std::vector<double> table_;  // dense (i, j, bit) lookup
};

/// (1/sqrt N) (-1)^{x.y} prod_{j>=1} [cos Theta_j + (-1)^{x_j+y_j} sin Theta_j].
DenseUnitary rot1_dense(const RotSpec& spec);
Circuit rot1_circuit(const RotSpec& spec);

/// prod_j cos[Psi_j(x) + pi y_j / 2].
DenseUnitary rot2_dense(const RotSpec& spec);
/// The same matrix expanded into complex exponentials:
/// 2^-n sum_{k in {0,1}^n} exp(i sum_j (-1)^{k_j} (Psi_j + pi y_j / 2)).
ComplexMatrix rot2_exponential_form(const RotSpec& spec);
Circuit rot2_circuit(const RotSpec& spec);

}  // namespace gqt
