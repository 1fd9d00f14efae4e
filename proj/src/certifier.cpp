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

#include "anyonrng/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "anyonrng/errors.hpp"
#include "anyonrng/parallel.hpp"
#include "anyonrng/random.hpp"

namespace anyonrng {

double epsilon_of(double k, double r, double epsilon_prime) {
  if (!(k >= 1.0)) throw std::invalid_argument("epsilon_of needs k >= 1");
  if (!(r > 0.0 && r <= 1.0)) {
    throw std::invalid_argument("epsilon_of needs r in (0, 1]");
  }
  if (!(epsilon_prime > 0.0 && epsilon_prime < 1.0)) {
    throw std::invalid_argument("epsilon_of needs epsilon' in (0, 1)");
  }
  return (4.0 + 1.0 / r) * std::sqrt(-2.0 * std::log(epsilon_prime) / k);
}

std::vector<double> default_thresholds(int count) {
  if (count < 2) throw std::invalid_argument("need at least 2 thresholds");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = 2.0 + 2.0 * i / static_cast<double>(count - 1);
  }
  out.back() = 4.0;
  return out;
}

CertificationParams CertificationParams::for_distribution(
    std::uint64_t k, const SettingsDistribution& dist) {
  CertificationParams p;
  p.k = k;
  p.r = dist.min_probability();
  p.settings_entropy_bits = dist.entropy_bits();
  return p;
}

void CertificationParams::validate() const {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("delta must be in (0, 1)");
  }
  if (!(epsilon_prime > 0.0 && epsilon_prime < 1.0)) {
    throw std::invalid_argument("epsilon' must be in (0, 1)");
  }
  if (!(r > 0.0 && r <= 0.25)) throw std::invalid_argument("r must be in (0, 1/4]");
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (thresholds.size() < 2 || thresholds.front() != 2.0 ||
      thresholds.back() != 4.0) {
    throw std::invalid_argument("thresholds must run from 2 to 4");
  }
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      throw std::invalid_argument("thresholds must increase strictly");
    }
  }
  if (!(settings_entropy_bits >= 0.0)) {
    throw std::invalid_argument("settings entropy must be non-negative");
  }
}

double certified_bound_bits(double k, double l_m, double epsilon, double delta,
                            const FCurveTable& fcurve) {
  const double bound = k * fcurve.evaluate(l_m - epsilon) - std::log2(1.0 / delta);
  return std::max(0.0, bound);
}

EntropyCertificate certify(const ViolationEstimate& estimate,
                           const CertificationParams& params,
                           const FCurveTable& fcurve) {
  params.validate();
  if (estimate.k != params.k) {
    throw std::invalid_argument("estimate has k = " + std::to_string(estimate.k) +
                                " but parameters say k = " +
                                std::to_string(params.k));
  }
  if (!std::isfinite(estimate.l_hat)) {
    throw DataIntegrityError("violation estimate is not finite");
  }
  EntropyCertificate cert;
  cert.params = params;
  cert.l_hat = estimate.l_hat;
  const double k = static_cast<double>(params.k);
  cert.epsilon = epsilon_of(k, params.r, params.epsilon_prime);
  cert.input_bits = k * params.settings_entropy_bits;
  if (estimate.l_hat > 4.0 + cert.epsilon) {
    throw DataIntegrityError("L-hat = " + std::to_string(estimate.l_hat) +
                             " exceeds the quantum maximum 4 by more than the "
                             "deviation margin");
  }
  const auto& th = params.thresholds;
  if (estimate.l_hat >= th.front()) {
    const auto it = std::upper_bound(th.begin(), th.end(), estimate.l_hat);
    cert.m = static_cast<int>(it - th.begin()) - 1;
    cert.l_m = th[*cert.m];
    cert.f_value = fcurve.evaluate(cert.l_m - cert.epsilon);
    cert.bound_bits = certified_bound_bits(k, cert.l_m, cert.epsilon,
                                           params.delta, fcurve);
  }
  cert.net_bits = cert.bound_bits - cert.input_bits;
  return cert;
}

double input_bits(double k, const SettingsDistribution& dist) {
  return k * dist.entropy_bits();
}

ExpansionRow expansion_point(double k, std::optional<double> alpha, double l_m,
                             double delta, double epsilon_prime,
                             const FCurveTable& fcurve) {
  const SettingsDistribution dist = alpha
                                        ? SettingsDistribution::biased(k, *alpha)
                                        : SettingsDistribution::uniform();
  ExpansionRow row;
  row.k = k;
  row.r = dist.min_probability();
  row.epsilon = epsilon_of(k, row.r, epsilon_prime);
  row.bound_bits = certified_bound_bits(k, l_m, row.epsilon, delta, fcurve);
  row.input_bits = input_bits(k, dist);
  row.net_bits = row.bound_bits - row.input_bits;
  return row;
}

ExpansionCurve net_randomness_curve(const std::vector<double>& k_grid,
                                    std::optional<double> alpha, double l_m,
                                    double delta, double epsilon_prime,
                                    const FCurveTable& fcurve) {
  if (alpha && !(*alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive");
  }
  ExpansionCurve curve;
  curve.alpha = alpha;
  curve.l_m = l_m;
  for (double k : k_grid) {
    curve.rows.push_back(
        expansion_point(k, alpha, l_m, delta, epsilon_prime, fcurve));
  }
  for (std::size_t i = 0; i < curve.rows.size(); ++i) {
    if (curve.rows[i].net_bits <= 0.0) continue;
    if (i == 0) {
      curve.crossing_k = curve.rows[0].k;
      break;
    }
    // Bisection in log k between the last non-positive and this point.
    double lo = std::log(curve.rows[i - 1].k);
    double hi = std::log(curve.rows[i].k);
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double net = expansion_point(std::exp(mid), alpha, l_m, delta,
                                         epsilon_prime, fcurve)
                             .net_bits;
      (net > 0.0 ? hi : lo) = mid;
    }
    curve.crossing_k = std::exp(hi);
    break;
  }
  return curve;
}

std::vector<double> log_k_grid(double k_min, double k_max, int per_decade) {
  if (!(k_min > 0.0 && k_max >= k_min) || per_decade < 1) {
    throw std::invalid_argument("invalid k grid");
  }
  std::vector<double> out;
  const double decades = std::log10(k_max / k_min);
  const int steps = static_cast<int>(std::lround(decades * per_decade));
  for (int i = 0; i <= steps; ++i) {
    out.push_back(k_min * std::pow(10.0, static_cast<double>(i) / per_decade));
  }
  return out;
}

AzumaCheck azuma_empirical_check(int runs, std::uint64_t k,
                                 const NoiseSpec& noise,
                                 const SettingsDistribution& dist,
                                 double epsilon_prime, std::uint64_t seed,
                                 unsigned threads, double epsilon_scale) {
  if (runs < 100) throw std::invalid_argument("Azuma check needs runs >= 100");
  if (k == 0) throw std::invalid_argument("Azuma check needs k >= 1");
  AzumaCheck check;
  check.runs = runs;
  check.k = k;
  check.epsilon_prime = epsilon_prime;
  check.epsilon = epsilon_scale *
                  epsilon_of(static_cast<double>(k), dist.min_probability(),
                             epsilon_prime);
  check.device_l = device_mabk_value(noise);

  std::vector<double> l_hats(runs);
  parallel_for(runs, threads, [&](std::size_t run) {
    const auto records =
        run_trials(k, dist, noise, derive_stream_seed(seed, run), 1);
    l_hats[run] = estimate(records, dist).l_hat;
  });
  double sum = 0.0;
  for (double l : l_hats) {
    sum += l;
    if (check.device_l <= l - check.epsilon) ++check.exceedances;
  }
  check.mean_l_hat = sum / runs;
  check.rate = static_cast<double>(check.exceedances) / runs;
  check.threshold =
      epsilon_prime + 3.0 * std::sqrt(epsilon_prime * (1.0 - epsilon_prime) / runs);
  check.passed = check.rate <= check.threshold;
  return check;
}

}  // namespace anyonrng
