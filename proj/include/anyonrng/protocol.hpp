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
#include <random>
#include <string>

namespace anyonrng {

/// Settings triple (x, y, z), one input bit per party.
struct Settings {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const Settings&, const Settings&) = default;
};

/// The four triples entering the MABK expression, in canonical order.
inline constexpr std::array<Settings, 4> kMabkSettings{
    {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}};

/// Position of `s` in kMabkSettings, or -1 if it is not one of them.
int mabk_setting_index(const Settings& s);

/// One protocol round.
struct TrialRecord {
  Settings settings;
  int a = 0;
  int b = 0;
  int c = 0;
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// I.i.d. distribution over the four MABK setting triples.
class SettingsDistribution {
 public:
  /// Probabilities in kMabkSettings order. Non-negative, summing to 1 within
  /// 1e-12, and at least one strictly positive.
  explicit SettingsDistribution(std::array<double, 4> probabilities);

  /// 1/4 on every triple.
  static SettingsDistribution uniform();

  /// P(011) = P(101) = P(110) = alpha / sqrt(k), P(000) = 1 - 3 alpha / sqrt(k).
  /// Requires alpha > 0 and k > (3 alpha)^2.
  static SettingsDistribution biased(double k, double alpha);

  const std::array<double, 4>& probabilities() const { return probabilities_; }
  double probability(const Settings& s) const;

  /// Smallest probability over the support.
  double min_probability() const { return min_probability_; }

  /// Shannon entropy in bits.
  double entropy_bits() const;

  Settings sample(std::mt19937_64& rng) const;

  /// Short human-readable label, e.g. "uniform" or "custom".
  const std::string& label() const { return label_; }

 private:
  std::array<double, 4> probabilities_;
  double min_probability_ = 0.0;
  std::string label_ = "custom";
};

}  // namespace anyonrng
