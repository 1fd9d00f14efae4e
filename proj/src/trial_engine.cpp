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

#include "anyonrng/trial_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "anyonrng/parallel.hpp"
#include "anyonrng/random.hpp"

namespace anyonrng {

NoiseSpec NoiseSpec::depolarizing(double p) {
  NoiseSpec n{NoiseKind::LogicalDepolarizing, p};
  n.validate();
  return n;
}

void NoiseSpec::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("noise probability must be in [0, 1]");
  }
}

std::string NoiseSpec::kind_name() const {
  return kind == NoiseKind::None ? "none" : "logical_depolarizing";
}

NoiseKind parse_noise_kind(const std::string& name) {
  if (name == "none") return NoiseKind::None;
  if (name == "logical_depolarizing" || name == "depolarizing") {
    return NoiseKind::LogicalDepolarizing;
  }
  throw std::invalid_argument("unknown noise kind '" + name + "'");
}

void apply_noise(LogicalState& state, const NoiseSpec& noise,
                 std::mt19937_64& rng) {
  if (noise.kind == NoiseKind::None || noise.p == 0.0) return;
  static constexpr LogicalPauli kPaulis[4] = {LogicalPauli::I, LogicalPauli::X,
                                              LogicalPauli::Y, LogicalPauli::Z};
  for (int q = 0; q < state.qubit_count(); ++q) {
    if (uniform01(rng) >= noise.p) continue;
    apply_logical_pauli(state, q, kPaulis[rng() % 4]);
  }
}

double device_mabk_value(const NoiseSpec& noise) {
  if (noise.kind == NoiseKind::None) return 4.0;
  const double keep = 1.0 - noise.p;
  return 4.0 * keep * keep * keep;
}

TrialRecord run_single_trial(const SettingsDistribution& dist,
                             const NoiseSpec& noise, std::mt19937_64& rng) {
  TrialRecord record;
  record.settings = dist.sample(rng);
  GhzPreparation ghz = prepare_ghz(rng());
  apply_noise(ghz.state, noise, rng);
  record.a = readout(ghz.state, 0, record.settings.x);
  record.b = readout(ghz.state, 1, record.settings.y);
  record.c = readout(ghz.state, 2, record.settings.z);
  return record;
}

std::vector<TrialRecord> run_trials(std::uint64_t k,
                                    const SettingsDistribution& dist,
                                    const NoiseSpec& noise, std::uint64_t seed,
                                    unsigned threads) {
  if (k == 0) throw std::invalid_argument("need at least one trial");
  noise.validate();
  std::vector<TrialRecord> records(k);
  parallel_for(k, threads, [&](std::size_t i) {
    std::mt19937_64 rng(derive_stream_seed(seed, i));
    records[i] = run_single_trial(dist, noise, rng);
  });
  return records;
}

}  // namespace anyonrng
