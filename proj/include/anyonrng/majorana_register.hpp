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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace anyonrng {

using Amplitude = std::complex<double>;

/// Fusion channel of a pair of Majorana modes: vacuum (I) or fermion (ψ).
enum class FusionChannel : std::uint8_t { Vacuum, Fermion };

struct FusionOutcome {
  FusionChannel channel = FusionChannel::Vacuum;

  /// +1 for I, -1 for ψ.
  constexpr int sign() const {
    return channel == FusionChannel::Vacuum ? +1 : -1;
  }
  static constexpr FusionOutcome from_sign(int sign) {
    return {sign > 0 ? FusionChannel::Vacuum : FusionChannel::Fermion};
  }
  friend constexpr bool operator==(FusionOutcome, FusionOutcome) = default;
};

enum class BraidDirection { CounterClockwise, Clockwise };

/// Ordered product c_{m_1} c_{m_2} ... c_{m_r} of Majorana operators acting
/// on the occupation basis of mode_count/2 fermionic modes.
///
/// Jordan-Wigner convention (fermionic mode k on bit k-1):
///   c_{2k-1} = (prod_{l<k} Z_l) X_k,   c_{2k} = (prod_{l<k} Z_l) Y_k.
/// Every product maps a basis state |s> to coefficient(s) |s ^ flip_mask()>,
/// so operators are applied as bit-indexed permutations with phases.
class MajoranaString {
 public:
  MajoranaString(int mode_count, std::initializer_list<int> modes);
  MajoranaString(int mode_count, std::span<const int> modes);

  int mode_count() const { return mode_count_; }
  std::span<const int> modes() const { return modes_; }
  std::uint64_t flip_mask() const { return flip_mask_; }

  /// Phase picked up by basis state s: (P|s>) = coefficient(s) |s ^ mask>.
  Amplitude coefficient(std::uint64_t s) const;

  /// out = P in. `in` and `out` must not alias.
  void apply(std::span<const Amplitude> in, std::span<Amplitude> out) const;

 private:
  int mode_count_;
  std::vector<int> modes_;
  std::uint64_t flip_mask_ = 0;
};

/// Hermitian involution prefactor * (c_{m_1} ... c_{m_r}) with eigenvalues
/// ±1, e.g. -i c_j c_k (pair fusion) or c_a c_b c_c c_d (quad fusion).
class MajoranaObservable {
 public:
  MajoranaObservable(MajoranaString string, Amplitude prefactor);

  const MajoranaString& string() const { return string_; }
  Amplitude prefactor() const { return prefactor_; }

  /// Coefficient of the full observable, including the prefactor.
  Amplitude coefficient(std::uint64_t s) const {
    return prefactor_ * string_.coefficient(s);
  }

 private:
  MajoranaString string_;
  Amplitude prefactor_;
};

/// Dense state vector of an even number M of Majorana modes.
///
/// The register owns one PRNG stream used for measurement sampling. All
/// operations act in place and keep the amplitude vector normalized.
class MajoranaRegister {
 public:
  /// Fock vacuum: every consecutive pair (2k-1, 2k) fuses to I.
  static MajoranaRegister vacuum(int mode_count, std::uint64_t seed);

  /// Arbitrary state (normalized on entry). Mainly for tests and oracles.
  static MajoranaRegister from_amplitudes(int mode_count,
                                          std::vector<Amplitude> amplitudes,
                                          std::uint64_t seed);

  int mode_count() const { return mode_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }

  double norm() const;
  /// Probability mass on odd total fermion parity.
  double odd_parity_weight() const;

  /// c_j. Odd operator; flips total parity. Exposed for algebra checks.
  void apply_majorana(int mode);

  /// Counterclockwise exchange B_{jk} = exp((iπ/4)(i c_j c_k)) =
  /// (1 - c_j c_k)/√2, or its inverse for the clockwise direction.
  void apply_braid(int j, int k,
                   BraidDirection direction = BraidDirection::CounterClockwise);

  /// exp(θ c_j c_k) = cos θ + c_j c_k sin θ. Unitary for real θ.
  void apply_pair_exponential(int j, int k, double angle);

  /// <ψ| O |ψ> for a Hermitian involution O.
  double expectation(const MajoranaObservable& observable) const;

  /// Born probability of finding (j, k) in `channel`, i.e. of the +1 (I) or
  /// -1 (ψ) eigenvalue of -i c_j c_k.
  double pair_probability(int j, int k, FusionChannel channel) const;
  FusionOutcome measure_pair(int j, int k);
  /// Post-selects `channel`; throws ProtocolError if that branch has
  /// probability below 1e-14.
  void project_pair(int j, int k, FusionChannel channel);

  /// Projective measurement of c_a c_b c_c c_d, operator order as given.
  double quad_probability(const std::array<int, 4>& modes, int sign) const;
  int measure_quad(const std::array<int, 4>& modes);
  void project_quad(const std::array<int, 4>& modes, int sign);

  /// Generic measurement of a Hermitian involution. Returns ±1.
  int measure(const MajoranaObservable& observable);
  void project(const MajoranaObservable& observable, int sign);

  std::mt19937_64& rng() { return rng_; }

 private:
  MajoranaRegister(int mode_count, std::uint64_t seed);

  void check_mode(int mode) const;
  void check_distinct(std::span<const int> modes) const;
  MajoranaObservable pair_observable(int j, int k) const;
  MajoranaObservable quad_observable(const std::array<int, 4>& modes) const;

  int mode_count_;
  std::vector<Amplitude> amplitudes_;
  std::mt19937_64 rng_;
};

/// Branch probabilities below this are never sampled and cannot be
/// post-selected.
inline constexpr double kZeroProbability = 1e-14;

}  // namespace anyonrng
