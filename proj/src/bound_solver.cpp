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

#include "anyonrng/bound_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "anyonrng/errors.hpp"
#include "anyonrng/mabk.hpp"
#include "anyonrng/parallel.hpp"

namespace anyonrng {
namespace {

int bit(int value, int party) { return (value >> (2 - party)) & 1; }

// Coefficient of P(abc|xyz) in the MABK expression.
int mabk_coefficient(int abc, int xyz) {
  const Settings s{bit(xyz, 0), bit(xyz, 1), bit(xyz, 2)};
  if (mabk_setting_index(s) < 0) return 0;
  return tau(s) * parity_sign(bit(abc, 0), bit(abc, 1), bit(abc, 2));
}

int severity(SdpStatus s) {
  switch (s) {
    case SdpStatus::Optimal:
      return 0;
    case SdpStatus::NearOptimal:
      return 1;
    case SdpStatus::MaxIterations:
    case SdpStatus::NumericalFailure:
    case SdpStatus::Unbounded:
      return 2;
    case SdpStatus::Infeasible:
      return 3;
  }
  return 2;
}

SdpStatus worst(SdpStatus a, SdpStatus b) {
  return severity(b) > severity(a) ? b : a;
}

}  // namespace

std::vector<std::vector<int>> mabk_symmetry_orbits() {
  std::array<std::array<int, 3>, 6> perms{};
  std::array<int, 3> perm{0, 1, 2};
  for (int i = 0; i < 6; ++i) {
    perms[i] = perm;
    std::next_permutation(perm.begin(), perm.end());
  }
  // Each valid transformation as a permutation of the 64 triple indices.
  std::vector<std::array<int, 64>> maps;
  for (const auto& pi : perms) {
    for (int inputs = 0; inputs < 8; ++inputs) {
      for (int flips = 0; flips < 64; ++flips) {
        std::array<int, 64> map{};
        bool invariant = true;
        for (int u = 0; u < 64 && invariant; ++u) {
          const int xyz = u / 8;
          const int abc = u % 8;
          int new_xyz = 0;
          int new_abc = 0;
          for (int i = 0; i < 3; ++i) {
            const int old = pi[i];
            const int x = bit(xyz, old);
            const int a = bit(abc, old) ^ ((flips >> (2 * old + x)) & 1);
            new_xyz |= (x ^ ((inputs >> old) & 1)) << (2 - i);
            new_abc |= a << (2 - i);
          }
          map[u] = 8 * new_xyz + new_abc;
          invariant = mabk_coefficient(new_abc, new_xyz) ==
                      mabk_coefficient(abc, xyz);
        }
        if (invariant) maps.push_back(map);
      }
    }
  }
  std::vector<int> orbit_of(64, -1);
  std::vector<std::vector<int>> orbits;
  for (int u = 0; u < 64; ++u) {
    if (orbit_of[u] >= 0) continue;
    std::vector<int> orbit;
    for (const auto& map : maps) {
      const int v = map[u];
      if (orbit_of[v] < 0) {
        orbit_of[v] = static_cast<int>(orbits.size());
        orbit.push_back(v);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

GuessingResult guessing_probability(double l_hat, const BoundOptions& options) {
  if (options.level == HierarchyLevel::NoSignalling) {
    throw std::invalid_argument("use nosignalling_max for the LP control");
  }
  GuessingResult result;
  result.l_hat = l_hat;
  result.level = options.level;
  result.per_triple.resize(64);

  std::vector<int> targets(64);
  std::iota(targets.begin(), targets.end(), 0);
  std::vector<std::vector<int>> orbits;
  if (options.symmetry_dedup) {
    orbits = mabk_symmetry_orbits();
    targets.clear();
    for (const auto& orbit : orbits) targets.push_back(orbit.front());
  }

  std::vector<TripleSolve> solves(targets.size());
  parallel_for(targets.size(), options.threads, [&](std::size_t i) {
    const OutcomeTriple triple{targets[i] % 8, targets[i] / 8};
    const MomentProblem mp = build_moment_problem(options.level, l_hat, triple);
    const SdpSolution sol = solve_sdp(mp.sdp, options.sdp);
    solves[i] = {triple,         sol.status, sol.value, sol.upper_bound(),
                 std::abs(sol.gap), sol.iterations};
  });

  result.status = SdpStatus::Optimal;
  result.solves = static_cast<int>(solves.size());
  bool first = true;
  for (std::size_t i = 0; i < solves.size(); ++i) {
    const auto& s = solves[i];
    result.status = worst(result.status, s.status);
    result.max_gap = std::max(result.max_gap, s.gap);
    if (first || s.upper_bound > result.p_star) {
      result.p_star = s.upper_bound;
      result.argmax = s.triple;
      first = false;
    }
    if (options.symmetry_dedup) {
      for (int member : orbits[i]) {
        result.per_triple[member] = s;
        result.per_triple[member].triple = {member % 8, member / 8};
      }
    } else {
      result.per_triple[targets[i]] = s;
    }
  }
  result.p_star = std::clamp(result.p_star, 0.0, 1.0);
  return result;
}

double f_of_l(double l_hat, const BoundOptions& options) {
  if (l_hat < 2.0) return 0.0;
  const GuessingResult g = guessing_probability(l_hat, options);
  if (!g.usable()) {
    throw SolverError("guessing probability at L = " + std::to_string(l_hat) +
                      " failed with status " + to_string(g.status));
  }
  return std::max(0.0, -std::log2(g.p_star));
}

std::vector<double> isotonic_nondecreasing(const std::vector<double>& values) {
  struct Pool {
    double sum;
    int count;
    double mean() const { return sum / count; }
  };
  std::vector<Pool> pools;
  for (double v : values) {
    pools.push_back({v, 1});
    while (pools.size() > 1 &&
           pools[pools.size() - 2].mean() > pools.back().mean()) {
      const Pool last = pools.back();
      pools.pop_back();
      pools.back().sum += last.sum;
      pools.back().count += last.count;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& p : pools) out.insert(out.end(), p.count, p.mean());
  return out;
}

namespace {

void apply_monotone_cleanup(FCurveTable& table) {
  std::vector<double> raw;
  for (const auto& p : table.points) raw.push_back(p.f_raw);
  const std::vector<double> fitted = isotonic_nondecreasing(raw);
  table.max_isotonic_adjustment = 0.0;
  for (std::size_t i = 0; i < fitted.size(); ++i) {
    table.points[i].f = fitted[i];
    table.max_isotonic_adjustment =
        std::max(table.max_isotonic_adjustment, std::abs(fitted[i] - raw[i]));
  }
}

}  // namespace

double FCurveTable::evaluate(double l) const {
  if (points.empty()) throw std::logic_error("empty f-curve table");
  if (l < points.front().l) return 0.0;
  if (l >= points.back().l) return points.back().f;
  const auto upper = std::upper_bound(
      points.begin(), points.end(), l,
      [](double v, const FCurvePoint& p) { return v < p.l; });
  const auto lower = upper - 1;
  const double t = (l - lower->l) / (upper->l - lower->l);
  return lower->f + t * (upper->f - lower->f);
}

FCurveTable FCurveTable::from_pairs(
    const std::vector<std::pair<double, double>>& lf) {
  if (lf.size() < 2) throw std::invalid_argument("f-curve needs >= 2 points");
  FCurveTable table;
  for (std::size_t i = 0; i < lf.size(); ++i) {
    if (i > 0 && !(lf[i].first > lf[i - 1].first)) {
      throw std::invalid_argument("f-curve L values must increase strictly");
    }
    FCurvePoint p;
    p.l = lf[i].first;
    p.f_raw = lf[i].second;
    p.p_star = std::exp2(-p.f_raw);
    table.points.push_back(p);
  }
  apply_monotone_cleanup(table);
  return table;
}

FCurveTable build_fcurve(int grid_points, const BoundOptions& options) {
  if (grid_points < 2) throw std::invalid_argument("need at least 2 grid points");
  FCurveTable table;
  table.level = options.level;
  table.tolerance = options.sdp.tolerance;
  table.symmetry_dedup = options.symmetry_dedup;
  for (int i = 0; i < grid_points; ++i) {
    // Endpoints exactly 2 and 4.
    const double l = i == grid_points - 1
                         ? 4.0
                         : 2.0 + 2.0 * i / static_cast<double>(grid_points - 1);
    const GuessingResult g = guessing_probability(l, options);
    if (!g.usable()) {
      throw SolverError("f-curve point L = " + std::to_string(l) +
                        " failed with status " + to_string(g.status));
    }
    FCurvePoint p;
    p.l = l;
    p.p_star = g.p_star;
    p.f_raw = std::max(0.0, -std::log2(g.p_star));
    p.argmax = g.argmax;
    p.status = g.status;
    p.max_gap = g.max_gap;
    p.solves = g.solves;
    table.points.push_back(p);
  }
  apply_monotone_cleanup(table);
  return table;
}

NoSignallingResult nosignalling_max(double l_hat, NoSignallingScope scope,
                                    const SdpOptions& options) {
  NoSignallingResult result;
  result.scope = scope;
  result.status = SdpStatus::Optimal;
  bool first = true;
  for (int xyz : nosignalling_settings(scope)) {
    for (int abc = 0; abc < 8; ++abc) {
      const MomentProblem mp = build_nosignalling_problem(l_hat, {abc, xyz}, scope);
      const SdpSolution sol = solve_sdp(mp.sdp, options);
      result.status = worst(result.status, sol.status);
      if (!sol.usable()) continue;
      if (first || sol.upper_bound() > result.value) {
        first = false;
        result.value = sol.upper_bound();
        result.argmax = {abc, xyz};
        result.settings = mp.settings;
        const auto& block = sol.z[mp.probability_block()];
        result.probabilities.assign(block.data(), block.data() + block.size());
      }
    }
  }
  if (!result.probabilities.empty()) {
    result.min_probability = *std::min_element(result.probabilities.begin(),
                                               result.probabilities.end());
  }
  result.value = std::clamp(result.value, 0.0, 1.0);
  return result;
}

}  // namespace anyonrng
