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

// Dihedral hidden subgroup experiment: n coset states
// (|0> + w_N^{d s_i}|1>)/sqrt 2 with known s_i and secret d, combined into
// (1/sqrt N) sum_x w_N^{z x^T}|x>, z_i = d s_i, then mapped by
//
//   |x> -> (1/sqrt N) sum_y w_N^{-y Phi x^T} |y>
//
// with a lower-triangular Phi built from the samples. Reading the outcome
// bits in reverse gives the candidate for d. All modular arithmetic is on
// exact integers mod N = 2^n.

#include <cstdint>
#include <string>
#include <vector>

#include "gqt/phasemat.hpp"
#include "gqt/qstate.hpp"
#include "gqt/rng.hpp"

namespace gqt {

class DhspInstance {
 public:
  /// s must hold n values; d and every s_i must lie in [0, 2^n).
  DhspInstance(int n, std::uint64_t d, std::vector<std::uint64_t> s);

  int n() const { return n_; }
  std::uint64_t modulus() const { return dim_of(n_); }
  std::uint64_t d() const { return d_; }
  const std::vector<std::uint64_t>& s() const { return s_; }

  int d_bit(int j) const { return static_cast<int>((d_ >> j) & 1U); }
  /// s_{ik}: bit k of s_i.
  int s_bit(int i, int k) const { return static_cast<int>((s_[i] >> k) & 1U); }
  /// S_{ji} = s_i 2^j mod 2^n.
  std::uint64_t big_s(int j, int i) const;
  /// z_i = d s_i mod 2^n.
  std::uint64_t z(int i) const;

 private:
  int n_;
  std::uint64_t d_;
  std::vector<std::uint64_t> s_;
};

/// (1/sqrt N) sum_x w_N^{z x^T}|x>, evaluated as a sum over x.
QState coset_state(const DhspInstance& inst);
/// The same state built factor by factor from (|0> + w_N^{z_i}|1>)/sqrt 2.
QState coset_state_tensor(const DhspInstance& inst);

/// phi(i, i) = 2^(n-1); phi(j, i) = S_{n-j-1, i} for j > i; zero above.
PhaseMatrix phi_from_samples(const DhspInstance& inst);

/// Applies the conjugate of the transform of phi_from_samples to the coset
/// state; amplitude of |y> is (1/N) sum_x w_N^{(z - y Phi) x^T}.
QState run_procedure(const DhspInstance& inst);
/// Same with an arbitrary Phi accepted by check_general.
QState run_procedure_with(const DhspInstance& inst, const PhaseMatrix& pm);

/// prod_i cos^2((z_i - (y Phi)_i) pi / N) for Phi = phi_from_samples.
double success_probability(const DhspInstance& inst, std::uint64_t y);

/// lambda_i = d s_i - (y Phi)_i at y = reversed bits of d, from the
/// closed form sum_{m >= n-1-i} S_{m,i} d_m - 2^(n-1) d_{n-1-i}.
std::vector<std::int64_t> lambda_vector(const DhspInstance& inst);
/// The same values as inner products sum_k s~_{ik} D_{ik}.
std::vector<std::int64_t> lambda_inner_product(const DhspInstance& inst);

/// D_{ik} = sum_{j=0}^{i-k} d_{n-i+j-1} 2^{n-i+j-1}, k = 0..i.
std::vector<std::vector<std::int64_t>> d_vectors(const DhspInstance& inst);

struct DhspAnalysis {
  PhaseMatrix phi;
  std::vector<std::int64_t> lambda;
  /// Probability of reading d, i.e. of outcome reverse_bits(d).
  double p_success = 0.0;
  /// max_i of the nonzero count of D_i.
  int f = 0;
};

DhspAnalysis analyze(const DhspInstance& inst);

struct RecoveryResult {
  std::uint64_t d_hat = 0;
  double empirical_rate = 0.0;
  double analytic_p = 0.0;
  /// Raw measurement outcomes y.
  Histogram histogram;
};

/// Measures run_procedure `trials` times, reverses the outcome bits and
/// takes a majority vote (ties go to the smallest candidate).
RecoveryResult recover_d(const DhspInstance& inst, std::uint64_t trials,
                         std::uint64_t seed);

/// Whether s_i makes lambda_i vanish mod N for every d.
bool is_perfect_sample(int n, int i, std::uint64_t s_i);

/// Smallest perfect s_i for every row, found by exhaustive search over
/// [0, 2^n) against all d. n <= 8.
std::vector<std::uint64_t> search_perfect_samples(int n);

/// Uniform member of the perfect family for row i: bit i set, bits below
/// i clear, bits above i random.
std::uint64_t random_perfect_sample(int n, int i, Rng& rng);

/// "perfect", "random" or "mixed:k" (first k rows perfect, rest uniform).
struct SampleMode {
  enum class Kind { kPerfect, kRandom, kMixed } kind = Kind::kPerfect;
  int k = 0;
  static SampleMode parse(const std::string& text);
  std::string to_string() const;
};

std::vector<std::uint64_t> draw_samples(int n, const SampleMode& mode,
                                        Rng& rng);

/// Phi_0 = (2^0, ..., 2^{n-1})^T (s_0, ..., s_{n-1}); entry (j, i) = 2^j s_i.
PhaseMatrix phi0_matrix(const DhspInstance& inst);

/// (1/N^2) |sum_x w_N^{d (Phi_0 - Phi) x^T}|^2 with d as a bit row vector.
double phi0_probability(const DhspInstance& inst, const PhaseMatrix& pm);

}  // namespace gqt
