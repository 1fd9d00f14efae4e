// Copyright 2026 The anyonrng Authors
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

#include "anyonrng/majorana_register.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "anyonrng/errors.hpp"
#include "anyonrng/random.hpp"

namespace anyonrng {
namespace {

constexpr Amplitude kI{0.0, 1.0};

void validate_mode_count(int mode_count) {
  if (mode_count < 2 || mode_count % 2 != 0) {
    throw std::invalid_argument("mode count must be even and >= 2, got " +
                                std::to_string(mode_count));
  }
  if (mode_count > 40) {
    throw std::invalid_argument("dense register limited to 40 modes");
  }
}

void validate_mode(int mode_count, int mode) {
  if (mode < 1 || mode > mode_count) {
    throw std::out_of_range("Majorana mode " + std::to_string(mode) +
                            " outside [1, " + std::to_string(mode_count) +
                            "]");
  }
}

// Single c_j acting on |s>: returns the phase, the flipped bit is
// 1 << ((j - 1) / 2).
Amplitude single_coefficient(int mode, std::uint64_t s) {
  const int bit = (mode - 1) / 2;
  const std::uint64_t below = (std::uint64_t{1} << bit) - 1;
  const double string_sign = (std::popcount(s & below) & 1) ? -1.0 : 1.0;
  if (mode % 2 == 1) return {string_sign, 0.0};
  // Y|0> = i|1>, Y|1> = -i|0>
  const bool occupied = (s >> bit) & 1;
  return occupied ? -kI * string_sign : kI * string_sign;
}

}  // namespace

MajoranaString::MajoranaString(int mode_count, std::initializer_list<int> modes)
    : MajoranaString(mode_count,
                     std::span<const int>(modes.begin(), modes.size())) {}

MajoranaString::MajoranaString(int mode_count, std::span<const int> modes)
    : mode_count_(mode_count), modes_(modes.begin(), modes.end()) {
  validate_mode_count(mode_count);
  for (int m : modes_) {
    validate_mode(mode_count, m);
    flip_mask_ ^= std::uint64_t{1} << ((m - 1) / 2);
  }
}

Amplitude MajoranaString::coefficient(std::uint64_t s) const {
  // Rightmost operator acts first.
  Amplitude phase{1.0, 0.0};
  for (auto it = modes_.rbegin(); it != modes_.rend(); ++it) {
    phase *= single_coefficient(*it, s);
    s ^= std::uint64_t{1} << ((*it - 1) / 2);
  }
  return phase;
}

void MajoranaString::apply(std::span<const Amplitude> in,
                           std::span<Amplitude> out) const {
  const std::size_t dim = std::size_t{1} << (mode_count_ / 2);
  if (in.size() != dim || out.size() != dim) {
    throw std::invalid_argument("state dimension does not match mode count");
  }
  for (std::uint64_t s = 0; s < dim; ++s) {
    out[s ^ flip_mask_] = coefficient(s) * in[s];
  }
}

MajoranaObservable::MajoranaObservable(MajoranaString string,
                                       Amplitude prefactor)
    : string_(std::move(string)), prefactor_(prefactor) {
  const auto r = static_cast<long>(string_.modes().size());
  // (c_1...c_r)^2 = (-1)^{r(r-1)/2} for distinct modes.
  const double square_sign = ((r * (r - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  const Amplitude square = prefactor_ * prefactor_ * square_sign;
  if (std::abs(square - 1.0) > 1e-12 || std::abs(std::abs(prefactor_) - 1.0) > 1e-12) {
    throw std::invalid_argument("observable is not a Hermitian involution");
  }
}

MajoranaRegister::MajoranaRegister(int mode_count, std::uint64_t seed)
    : mode_count_(mode_count), rng_(seed) {
  validate_mode_count(mode_count);
  amplitudes_.assign(std::size_t{1} << (mode_count / 2), Amplitude{});
}

MajoranaRegister MajoranaRegister::vacuum(int mode_count, std::uint64_t seed) {
  MajoranaRegister reg(mode_count, seed);
  reg.amplitudes_[0] = 1.0;
  return reg;
}

MajoranaRegister MajoranaRegister::from_amplitudes(
    int mode_count, std::vector<Amplitude> amplitudes, std::uint64_t seed) {
  MajoranaRegister reg(mode_count, seed);
  if (amplitudes.size() != reg.amplitudes_.size()) {
    throw std::invalid_argument("amplitude vector has wrong length");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (norm2 < 1e-300) throw std::invalid_argument("zero state vector");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amplitudes) a *= scale;
  reg.amplitudes_ = std::move(amplitudes);
  return reg;
}

double MajoranaRegister::norm() const {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  return std::sqrt(norm2);
}

double MajoranaRegister::odd_parity_weight() const {
  double weight = 0.0;
  for (std::uint64_t s = 0; s < amplitudes_.size(); ++s) {
    if (std::popcount(s) & 1) weight += std::norm(amplitudes_[s]);
  }
  return weight;
}

void MajoranaRegister::check_mode(int mode) const {
  validate_mode(mode_count_, mode);
}

void MajoranaRegister::check_distinct(std::span<const int> modes) const {
  for (std::size_t a = 0; a < modes.size(); ++a) {
    check_mode(modes[a]);
    for (std::size_t b = a + 1; b < modes.size(); ++b) {
      if (modes[a] == modes[b]) {
        throw std::invalid_argument("repeated Majorana mode " +
                                    std::to_string(modes[a]));
      }
    }
  }
}

void MajoranaRegister::apply_majorana(int mode) {
  check_mode(mode);
  const MajoranaString op(mode_count_, {mode});
  std::vector<Amplitude> out(amplitudes_.size());
  op.apply(amplitudes_, out);
  amplitudes_ = std::move(out);
}

void MajoranaRegister::apply_braid(int j, int k, BraidDirection direction) {
  apply_pair_exponential(
      j, k, direction == BraidDirection::CounterClockwise ? -std::numbers::pi / 4 : std::numbers::pi / 4);
}

void MajoranaRegister::apply_pair_exponential(int j, int k, double angle) {
  const std::array<int, 2> modes{j, k};
  check_distinct(modes);
  const MajoranaString product(mode_count_, modes);
  const std::uint64_t mask = product.flip_mask();
  const std::uint64_t pivot = mask & (~mask + 1);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (mask == 0) {
    // c_{2k-1} c_{2k} is diagonal: i Z_k up to the string.
    for (std::uint64_t t = 0; t < amplitudes_.size(); ++t) {
      amplitudes_[t] *= c + s * product.coefficient(t);
    }
    return;
  }
  for (std::uint64_t t = 0; t < amplitudes_.size(); ++t) {
    if (t & pivot) continue;
    const std::uint64_t u = t ^ mask;
    const Amplitude vt = amplitudes_[t];
    const Amplitude vu = amplitudes_[u];
    amplitudes_[t] = c * vt + s * product.coefficient(u) * vu;
    amplitudes_[u] = c * vu + s * product.coefficient(t) * vt;
  }
}

double MajoranaRegister::expectation(const MajoranaObservable& observable) const {
  const std::uint64_t mask = observable.string().flip_mask();
  Amplitude total{};
  for (std::uint64_t s = 0; s < amplitudes_.size(); ++s) {
    total += std::conj(amplitudes_[s ^ mask]) * observable.coefficient(s) *
             amplitudes_[s];
  }
  return total.real();
}

MajoranaObservable MajoranaRegister::pair_observable(int j, int k) const {
  const std::array<int, 2> modes{j, k};
  check_distinct(modes);
  return MajoranaObservable(MajoranaString(mode_count_, modes), -kI);
}

MajoranaObservable MajoranaRegister::quad_observable(
    const std::array<int, 4>& modes) const {
  check_distinct(modes);
  return MajoranaObservable(MajoranaString(mode_count_, modes), 1.0);
}

double MajoranaRegister::pair_probability(int j, int k,
                                          FusionChannel channel) const {
  const double z = expectation(pair_observable(j, k));
  const int sign = FusionOutcome{channel}.sign();
  return std::clamp(0.5 * (1.0 + sign * z), 0.0, 1.0);
}

FusionOutcome MajoranaRegister::measure_pair(int j, int k) {
  return FusionOutcome::from_sign(measure(pair_observable(j, k)));
}

void MajoranaRegister::project_pair(int j, int k, FusionChannel channel) {
  project(pair_observable(j, k), FusionOutcome{channel}.sign());
}

double MajoranaRegister::quad_probability(const std::array<int, 4>& modes,
                                          int sign) const {
  const double z = expectation(quad_observable(modes));
  return std::clamp(0.5 * (1.0 + (sign > 0 ? z : -z)), 0.0, 1.0);
}

int MajoranaRegister::measure_quad(const std::array<int, 4>& modes) {
  return measure(quad_observable(modes));
}

void MajoranaRegister::project_quad(const std::array<int, 4>& modes, int sign) {
  project(quad_observable(modes), sign);
}

int MajoranaRegister::measure(const MajoranaObservable& observable) {
  const double z = expectation(observable);
  const double p_plus = std::clamp(0.5 * (1.0 + z), 0.0, 1.0);
  int sign;
  if (p_plus < kZeroProbability) {
    sign = -1;
  } else if (1.0 - p_plus < kZeroProbability) {
    sign = +1;
  } else {
    sign = uniform01(rng_) < p_plus ? +1 : -1;
  }
  project(observable, sign);
  return sign;
}

void MajoranaRegister::project(const MajoranaObservable& observable, int sign) {
  const std::uint64_t mask = observable.string().flip_mask();
  const double z = expectation(observable);
  const double probability = 0.5 * (1.0 + (sign > 0 ? z : -z));
  if (probability < kZeroProbability) {
    throw ProtocolError("post-selected measurement branch has probability " +
                        std::to_string(probability));
  }
  const double sgn = sign > 0 ? 1.0 : -1.0;
  // (1 + sgn O)/2 applied pairwise in place.
  if (mask == 0) {
    for (std::uint64_t s = 0; s < amplitudes_.size(); ++s) {
      amplitudes_[s] *= 0.5 * (1.0 + sgn * observable.coefficient(s));
    }
  } else {
    const std::uint64_t pivot = mask & (~mask + 1);
    for (std::uint64_t t = 0; t < amplitudes_.size(); ++t) {
      if (t & pivot) continue;
      const std::uint64_t u = t ^ mask;
      const Amplitude vt = amplitudes_[t];
      const Amplitude vu = amplitudes_[u];
      amplitudes_[t] = 0.5 * (vt + sgn * observable.coefficient(u) * vu);
      amplitudes_[u] = 0.5 * (vu + sgn * observable.coefficient(t) * vt);
    }
  }
  const double n = norm();
  if (!(n > 1e-300) || std::abs(n * n - probability) > 1e-9) {
    throw InternalError("degenerate state norm after projection");
  }
  for (auto& a : amplitudes_) a /= n;
}

}  // namespace anyonrng
