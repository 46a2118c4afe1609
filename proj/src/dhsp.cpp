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

#include "gqt/dhsp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "gqt/gqft.hpp"

namespace gqt {

namespace {

constexpr int kPerfectSearchCap = 8;

std::uint64_t mod_mask(int n) { return dim_of(n) - 1; }

// lambda_i for one row, closed form, without reduction.
std::int64_t lambda_row(int n, int i, std::uint64_t s_i, std::uint64_t d) {
  const std::uint64_t mask = mod_mask(n);
  std::int64_t acc = 0;
  for (int m = n - 1 - i; m < n; ++m) {
    if ((d >> m) & 1U) acc += static_cast<std::int64_t>((s_i << m) & mask);
  }
  if ((d >> (n - 1 - i)) & 1U) acc -= static_cast<std::int64_t>(dim_of(n - 1));
  return acc;
}

double cos_squared(std::uint64_t residue, std::uint64_t modulus) {
  const double c = std::cos(std::numbers::pi * static_cast<double>(residue) /
                            static_cast<double>(modulus));
  return c * c;
}

}  // namespace

DhspInstance::DhspInstance(int n, std::uint64_t d, std::vector<std::uint64_t> s)
    : n_(n), d_(d), s_(std::move(s)) {
  if (n < 1 || n > kStateCap) throw InvalidInput("DhspInstance: bad n");
  if (d_ >= dim_of(n)) throw InvalidInput("DhspInstance: d must lie in [0, 2^n)");
  if (s_.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("DhspInstance: need exactly n samples");
  }
  for (std::uint64_t v : s_) {
    if (v >= dim_of(n)) throw InvalidInput("DhspInstance: samples must lie in [0, 2^n)");
  }
}

std::uint64_t DhspInstance::big_s(int j, int i) const {
  return (s_[i] << j) & mod_mask(n_);
}

std::uint64_t DhspInstance::z(int i) const { return (d_ * s_[i]) & mod_mask(n_); }

QState coset_state(const DhspInstance& inst) {
  const int n = inst.n();
  const std::uint64_t dim = dim_of(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<Complex> amps(dim);
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::uint64_t e = 0;
    for (int i = 0; i < n; ++i) {
      if ((x >> i) & 1U) e += inst.z(i);
    }
    e &= mod_mask(n);
    amps[x] = std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                    static_cast<double>(dim));
  }
  return QState::from_amplitudes(n, std::move(amps));
}

QState coset_state_tensor(const DhspInstance& inst) {
  const int n = inst.n();
  std::vector<Complex> amps{1.0};
  for (int i = 0; i < n; ++i) {
    const Complex one = std::polar(1.0 / std::numbers::sqrt2,
                                   2.0 * std::numbers::pi *
                                       static_cast<double>(inst.z(i)) /
                                       static_cast<double>(inst.modulus()));
    const Complex zero = 1.0 / std::numbers::sqrt2;
    // Qubit i is the new most significant bit.
    std::vector<Complex> next(amps.size() * 2);
    for (std::size_t k = 0; k < amps.size(); ++k) {
      next[k] = amps[k] * zero;
      next[k + amps.size()] = amps[k] * one;
    }
    amps = std::move(next);
  }
  return QState::from_amplitudes(n, std::move(amps));
}

PhaseMatrix phi_from_samples(const DhspInstance& inst) {
  const int n = inst.n();
  std::vector<double> e(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    e[i * n + i] = static_cast<double>(dim_of(n - 1));
    for (int j = i + 1; j < n; ++j) {
      e[j * n + i] = static_cast<double>(inst.big_s(n - j - 1, i));
    }
  }
  return PhaseMatrix(n, std::move(e));
}

QState run_procedure(const DhspInstance& inst) {
  require_dense(inst.n(), "run_procedure");
  const DenseUnitary g = gqft_dense(GqftSpec(phi_from_samples(inst)));
  return apply_dense(coset_state(inst), g.conjugate());
}

QState run_procedure_with(const DhspInstance& inst, const PhaseMatrix& pm) {
  if (pm.n() != inst.n()) throw DimensionError("phase matrix size differs from n");
  require_dense(inst.n(), "run_procedure_with");
  ValidityReport rep = check_general(pm);
  if (!rep.valid) throw InvalidSpec(std::move(rep));
  const DenseUnitary t = DenseUnitary::from_matrix(
      pm.n(), phase_transform_matrix(pm).conjugate());
  return apply_dense(coset_state(inst), t);
}

double success_probability(const DhspInstance& inst, std::uint64_t y) {
  const int n = inst.n();
  if (y >= inst.modulus()) throw IndexError("success_probability: y out of range");
  const std::uint64_t mask = mod_mask(n);
  double p = 1.0;
  for (int i = 0; i < n; ++i) {
    // (y Phi)_i = y_i 2^(n-1) + sum_{j > i} y_j S_{n-j-1, i}
    std::uint64_t yt = ((y >> i) & 1U) ? dim_of(n - 1) : 0;
    for (int j = i + 1; j < n; ++j) {
      if ((y >> j) & 1U) yt += inst.big_s(n - j - 1, i);
    }
    p *= cos_squared((inst.z(i) - yt) & mask, inst.modulus());
  }
  return p;
}

std::vector<std::int64_t> lambda_vector(const DhspInstance& inst) {
  std::vector<std::int64_t> out(inst.n());
  for (int i = 0; i < inst.n(); ++i) {
    out[i] = lambda_row(inst.n(), i, inst.s()[i], inst.d());
  }
  return out;
}

std::vector<std::vector<std::int64_t>> d_vectors(const DhspInstance& inst) {
  const int n = inst.n();
  std::vector<std::vector<std::int64_t>> out(n);
  for (int i = 0; i < n; ++i) {
    out[i].resize(i + 1);
    for (int k = 0; k <= i; ++k) {
      std::int64_t acc = 0;
      for (int j = 0; j <= i - k; ++j) {
        const int bit = n - i + j - 1;
        acc += static_cast<std::int64_t>(inst.d_bit(bit)) << bit;
      }
      out[i][k] = acc;
    }
  }
  return out;
}

std::vector<std::int64_t> lambda_inner_product(const DhspInstance& inst) {
  const int n = inst.n();
  const auto dv = d_vectors(inst);
  std::vector<std::int64_t> out(n);
  for (int i = 0; i < n; ++i) {
    std::int64_t acc = 0;
    for (int k = 0; k <= i; ++k) {
      const std::int64_t bit = inst.s_bit(i, k) - (k == i ? 1 : 0);
      acc += (bit << k) * dv[i][k];
    }
    out[i] = acc;
  }
  return out;
}

DhspAnalysis analyze(const DhspInstance& inst) {
  DhspAnalysis a{phi_from_samples(inst), lambda_vector(inst), 0.0, 0};
  a.p_success = success_probability(inst, reverse_bits(inst.d(), inst.n()));
  for (const auto& row : d_vectors(inst)) {
    const int nz = static_cast<int>(std::ranges::count_if(
        row, [](std::int64_t v) { return v != 0; }));
    a.f = std::max(a.f, nz);
  }
  return a;
}

RecoveryResult recover_d(const DhspInstance& inst, std::uint64_t trials,
                         std::uint64_t seed) {
  if (trials == 0) throw InvalidInput("recover_d: trials must be >= 1");
  const QState out = run_procedure(inst);
  RecoveryResult r;
  r.histogram = measure_all(out, seed, trials);
  r.analytic_p = success_probability(inst, reverse_bits(inst.d(), inst.n()));
  std::map<std::uint64_t, std::uint64_t> votes;
  std::uint64_t hits = 0;
  for (const auto& [y, count] : r.histogram) {
    const std::uint64_t cand = reverse_bits(y, inst.n());
    votes[cand] += count;
    if (cand == inst.d()) hits += count;
  }
  std::uint64_t best = 0;
  for (const auto& [cand, count] : votes) {
    // Ascending keys: strict > keeps the smallest candidate on ties.
    if (count > best) {
      best = count;
      r.d_hat = cand;
    }
  }
  r.empirical_rate = static_cast<double>(hits) / static_cast<double>(trials);
  return r;
}

bool is_perfect_sample(int n, int i, std::uint64_t s_i) {
  const std::int64_t modulus = static_cast<std::int64_t>(dim_of(n));
  for (std::uint64_t d = 0; d < dim_of(n); ++d) {
    if (lambda_row(n, i, s_i, d) % modulus != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> search_perfect_samples(int n) {
  if (n < 1 || n > kPerfectSearchCap) {
    throw CapExceeded("search_perfect_samples: n must lie in [1, 8]");
  }
  std::vector<std::uint64_t> s(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t v = 0;
    while (!is_perfect_sample(n, i, v)) ++v;  // s_i = 2^i always qualifies
    s[i] = v;
  }
  return s;
}

std::uint64_t random_perfect_sample(int n, int i, Rng& rng) {
  const std::uint64_t high = rng.below(dim_of(n - i - 1));
  return (high << (i + 1)) | (std::uint64_t{1} << i);
}

SampleMode SampleMode::parse(const std::string& text) {
  if (text == "perfect") return {Kind::kPerfect, 0};
  if (text == "random") return {Kind::kRandom, 0};
  if (text.starts_with("mixed:")) {
    int k = -1;
    const char* first = text.data() + 6;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 0) return {Kind::kMixed, k};
  }
  throw InvalidInput("sample mode must be perfect, random or mixed:<k>, got '" +
                     text + "'");
}

std::string SampleMode::to_string() const {
  switch (kind) {
    case Kind::kPerfect: return "perfect";
    case Kind::kRandom: return "random";
    case Kind::kMixed: return "mixed:" + std::to_string(k);
  }
  return {};
}

std::vector<std::uint64_t> draw_samples(int n, const SampleMode& mode,
                                        Rng& rng) {
  if (mode.kind == SampleMode::Kind::kPerfect) return search_perfect_samples(n);
  const int k = mode.kind == SampleMode::Kind::kMixed ? mode.k : 0;
  if (k > n) throw InvalidInput("mixed:k needs k <= n");
  std::vector<std::uint64_t> s(n);
  for (int i = 0; i < n; ++i) {
    s[i] = i < k ? random_perfect_sample(n, i, rng) : rng.below(dim_of(n));
  }
  return s;
}

PhaseMatrix phi0_matrix(const DhspInstance& inst) {
  const int n = inst.n();
  std::vector<double> e(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      e[j * n + i] = std::ldexp(static_cast<double>(inst.s()[i]), j);
    }
  }
  return PhaseMatrix(n, std::move(e));
}

double phi0_probability(const DhspInstance& inst, const PhaseMatrix& pm) {
  const int n = inst.n();
  if (pm.n() != n) throw DimensionError("phase matrix size differs from n");
  const PhaseMatrix phi0 = phi0_matrix(inst);
  const double modulus = static_cast<double>(inst.modulus());
  std::vector<double> w(n, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (inst.d_bit(i)) w[j] += phi0(i, j) - pm(i, j);
    }
  }
  Complex acc = 0.0;
  for (std::uint64_t x = 0; x < inst.modulus(); ++x) {
    double e = 0.0;
    for (int j = 0; j < n; ++j) {
      if ((x >> j) & 1U) e += w[j];
    }
    acc += std::polar(1.0, 2.0 * std::numbers::pi *
                               std::remainder(e, modulus) / modulus);
  }
  return std::norm(acc) / (modulus * modulus);
}

}  // namespace gqt
