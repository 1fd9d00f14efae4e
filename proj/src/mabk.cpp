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

#include "anyonrng/mabk.hpp"

#include <stdexcept>
#include <string>

namespace anyonrng {

int tau(const Settings& s) {
  switch (mabk_setting_index(s)) {
    case 0:
      return +1;
    case 1:
    case 2:
    case 3:
      return -1;
    default:
      throw std::invalid_argument("settings triple is not in the MABK set");
  }
}

Parity parity_class(int a, int b, int c) {
  return ((a + b + c) & 1) ? Parity::Odd : Parity::Even;
}

namespace {

double weight(const Settings& s, const SettingsDistribution& dist) {
  const double p = dist.probability(s);
  if (!(p > 0.0)) {
    throw std::invalid_argument(
        "record settings (" + std::to_string(s.x) + "," + std::to_string(s.y) +
        "," + std::to_string(s.z) + ") have zero probability");
  }
  return tau(s) / p;
}

}  // namespace

ViolationEstimate estimate(std::span<const TrialRecord> records,
                           const SettingsDistribution& dist) {
  if (records.empty()) {
    throw std::invalid_argument("cannot estimate from zero records");
  }
  ViolationEstimate est;
  est.k = records.size();
  for (const auto& r : records) {
    weight(r.settings, dist);
    const int i = mabk_setting_index(r.settings);
    const int odd = parity_class(r.a, r.b, r.c) == Parity::Odd ? 1 : 0;
    ++est.counts[i][odd];
  }
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    const auto diff = static_cast<double>(est.counts[i][0]) -
                      static_cast<double>(est.counts[i][1]);
    if (diff != 0.0) sum += weight(kMabkSettings[i], dist) * diff;
  }
  est.l_hat = sum / static_cast<double>(est.k);
  return est;
}

double trial_variable(const TrialRecord& record,
                      const SettingsDistribution& dist) {
  return weight(record.settings, dist) * parity_sign(record.a, record.b, record.c);
}

double mabk_value(const Behavior& behavior) {
  double value = 0.0;
  for (const auto& s : kMabkSettings) {
    const auto& row = behavior[4 * s.x + 2 * s.y + s.z];
    double correlator = 0.0;
    for (int abc = 0; abc < 8; ++abc) {
      correlator +=
          parity_sign(abc >> 2, (abc >> 1) & 1, abc & 1) * row[abc];
    }
    value += tau(s) * correlator;
  }
  return value;
}

}  // namespace anyonrng
