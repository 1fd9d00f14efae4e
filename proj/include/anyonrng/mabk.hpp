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
#include <cstdint>
#include <span>

#include "anyonrng/protocol.hpp"

namespace anyonrng {

/// τ(x,y,z) = (-1)^{(x+y+z)/2} on the four MABK triples.
/// Throws std::invalid_argument for any other triple.
int tau(const Settings& s);

enum class Parity { Even, Odd };

Parity parity_class(int a, int b, int c);

/// +1 for even a+b+c, -1 for odd.
inline int parity_sign(int a, int b, int c) {
  return parity_class(a, b, c) == Parity::Even ? 1 : -1;
}

struct ViolationEstimate {
  double l_hat = 0.0;
  std::uint64_t k = 0;
  /// counts[i] = {N_even, N_odd} for kMabkSettings[i].
  std::array<std::array<std::uint64_t, 2>, 4> counts{};
};

/// L̂ = (1/k) Σ_S τ(xyz)/P(xyz) (N_even - N_odd). Settings with no records
/// contribute zero. Throws std::invalid_argument for an empty record list or
/// a record whose settings have zero probability under `dist`.
ViolationEstimate estimate(std::span<const TrialRecord> records,
                           const SettingsDistribution& dist);

/// Per-round variable τ(xyz) Λ(abc) / P(xyz) with Λ = ±1 for even/odd parity.
double trial_variable(const TrialRecord& record,
                      const SettingsDistribution& dist);

/// Conditional outcome distribution P(abc|xyz) for all eight setting
/// triples; index [4x + 2y + z][4a + 2b + c].
using Behavior = std::array<std::array<double, 8>, 8>;

/// Σ_S τ(xyz) [P(even|xyz) - P(odd|xyz)].
double mabk_value(const Behavior& behavior);

}  // namespace anyonrng
