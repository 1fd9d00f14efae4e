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
#include <optional>
#include <vector>

#include "anyonrng/bound_solver.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/protocol.hpp"
#include "anyonrng/trial_engine.hpp"

namespace anyonrng {

/// Deviation ε = (4 + 1/r) sqrt(-2 ln ε' / k).
double epsilon_of(double k, double r, double epsilon_prime);

/// `count` equally spaced thresholds from 2 to 4 inclusive.
std::vector<double> default_thresholds(int count = 21);

struct CertificationParams {
  double delta = 0.001;
  double epsilon_prime = 0.01;
  std::vector<double> thresholds = default_thresholds();
  std::uint64_t k = 0;
  /// Minimum settings probability.
  double r = 0.25;
  /// Shannon entropy of the settings distribution, bits per trial.
  double settings_entropy_bits = 2.0;

  static CertificationParams for_distribution(std::uint64_t k,
                                              const SettingsDistribution& dist);
  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

struct EntropyCertificate {
  CertificationParams params;
  double l_hat = 0.0;
  /// Index of the threshold bracket containing L̂; empty if L̂ < L_0.
  std::optional<int> m;
  double l_m = 0.0;
  double epsilon = 0.0;
  double f_value = 0.0;
  double bound_bits = 0.0;
  double input_bits = 0.0;
  double net_bits = 0.0;
};

/// max(0, k f(l_m - epsilon) - log2(1/delta)).
double certified_bound_bits(double k, double l_m, double epsilon, double delta,
                            const FCurveTable& fcurve);

/// Theorem-style certificate for an observed estimate. L̂ above 4 + ε is
/// not attainable by any quantum device up to the concentration margin and
/// raises DataIntegrityError; 4 < L̂ <= 4 + ε uses the top threshold.
EntropyCertificate certify(const ViolationEstimate& estimate,
                           const CertificationParams& params,
                           const FCurveTable& fcurve);

/// k H(dist).
double input_bits(double k, const SettingsDistribution& dist);

struct ExpansionRow {
  double k = 0.0;
  double r = 0.0;
  double epsilon = 0.0;
  double bound_bits = 0.0;
  double input_bits = 0.0;
  double net_bits = 0.0;
};

struct ExpansionCurve {
  /// Empty for the uniform distribution.
  std::optional<double> alpha;
  double l_m = 3.9;
  std::vector<ExpansionRow> rows;
  /// Smallest k (bisection between grid points) where net_bits turns
  /// positive, if it does on the grid.
  std::optional<double> crossing_k;
};

/// Net randomness at bracket L_m for each k: biased(k, alpha) settings when
/// `alpha` is set, uniform settings otherwise.
ExpansionRow expansion_point(double k, std::optional<double> alpha, double l_m,
                             double delta, double epsilon_prime,
                             const FCurveTable& fcurve);

ExpansionCurve net_randomness_curve(const std::vector<double>& k_grid,
                                    std::optional<double> alpha, double l_m,
                                    double delta, double epsilon_prime,
                                    const FCurveTable& fcurve);

/// Log-spaced grid from k_min to k_max with `per_decade` points per decade.
std::vector<double> log_k_grid(double k_min, double k_max, int per_decade);

struct AzumaCheck {
  int runs = 0;
  std::uint64_t k = 0;
  double epsilon = 0.0;
  double epsilon_prime = 0.0;
  /// Exact MABK value of the simulated device (conditional expectation of
  /// every L̂_i for an i.i.d. device).
  double device_l = 0.0;
  double mean_l_hat = 0.0;
  int exceedances = 0;
  double rate = 0.0;
  /// ε' + 3 sqrt(ε'(1 - ε') / runs).
  double threshold = 0.0;
  bool passed = false;
};

/// Simulates `runs` independent experiments of k trials and counts the
/// deviation events {device_l <= L̂ - epsilon_scale * ε}.
AzumaCheck azuma_empirical_check(int runs, std::uint64_t k,
                                 const NoiseSpec& noise,
                                 const SettingsDistribution& dist,
                                 double epsilon_prime, std::uint64_t seed,
                                 unsigned threads = 1,
                                 double epsilon_scale = 1.0);

}  // namespace anyonrng
