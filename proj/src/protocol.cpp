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

#include "anyonrng/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anyonrng/random.hpp"

namespace anyonrng {

int mabk_setting_index(const Settings& s) {
  for (int i = 0; i < 4; ++i) {
    if (kMabkSettings[i] == s) return i;
  }
  return -1;
}

SettingsDistribution::SettingsDistribution(std::array<double, 4> probabilities)
    : probabilities_(probabilities) {
  double total = 0.0;
  min_probability_ = 1.0;
  for (double p : probabilities_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw std::invalid_argument("settings probabilities must be >= 0");
    }
    total += p;
    if (p > 0.0) min_probability_ = std::min(min_probability_, p);
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("settings probabilities must sum to 1");
  }
}

SettingsDistribution SettingsDistribution::uniform() {
  SettingsDistribution d({0.25, 0.25, 0.25, 0.25});
  d.label_ = "uniform";
  return d;
}

SettingsDistribution SettingsDistribution::biased(double k, double alpha) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("biased distribution needs alpha > 0");
  }
  if (!(k > 9.0 * alpha * alpha)) {
    throw std::invalid_argument(
        "biased distribution needs k > (3 alpha)^2 so that P(000) > 0");
  }
  const double q = alpha / std::sqrt(k);
  // P(000) is fixed by normalization so the sum is exact in floating point.
  SettingsDistribution d({1.0 - 3.0 * q, q, q, q});
  d.label_ = "biased";
  return d;
}

double SettingsDistribution::probability(const Settings& s) const {
  const int i = mabk_setting_index(s);
  return i < 0 ? 0.0 : probabilities_[i];
}

double SettingsDistribution::entropy_bits() const {
  double h = 0.0;
  for (double p : probabilities_) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

Settings SettingsDistribution::sample(std::mt19937_64& rng) const {
  const double u = uniform01(rng);
  double acc = 0.0;
  int last = 0;
  for (int i = 0; i < 4; ++i) {
    if (probabilities_[i] <= 0.0) continue;
    last = i;
    acc += probabilities_[i];
    if (u < acc) return kMabkSettings[i];
  }
  return kMabkSettings[last];
}

}  // namespace anyonrng
