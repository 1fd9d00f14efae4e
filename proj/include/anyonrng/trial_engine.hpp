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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "anyonrng/logical_qubits.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/protocol.hpp"

namespace anyonrng {

enum class NoiseKind { None, LogicalDepolarizing };

/// Logical depolarizing channel: each qubit independently, with probability
/// p, receives a Pauli drawn uniformly from {I, X, Y, Z}. At p = 1 every
/// qubit is maximally mixed.
struct NoiseSpec {
  NoiseKind kind = NoiseKind::None;
  double p = 0.0;

  static NoiseSpec none() { return {}; }
  static NoiseSpec depolarizing(double p);

  /// Throws std::invalid_argument unless p is in [0, 1].
  void validate() const;
  std::string kind_name() const;
};

NoiseKind parse_noise_kind(const std::string& name);

void apply_noise(LogicalState& state, const NoiseSpec& noise,
                 std::mt19937_64& rng);

/// Exact MABK value of the simulated device: 4 (1 - p)^3 under logical
/// depolarizing noise, 4 without noise.
double device_mabk_value(const NoiseSpec& noise);

/// One round driven by its own PRNG stream: sample settings, prepare GHZ,
/// apply noise, rotate and read out each qubit.
TrialRecord run_single_trial(const SettingsDistribution& dist,
                             const NoiseSpec& noise, std::mt19937_64& rng);

/// k rounds; round i uses the stream derive_stream_seed(seed, i), so the
/// result is independent of `threads`.
std::vector<TrialRecord> run_trials(std::uint64_t k,
                                    const SettingsDistribution& dist,
                                    const NoiseSpec& noise, std::uint64_t seed,
                                    unsigned threads = 1);

}  // namespace anyonrng
