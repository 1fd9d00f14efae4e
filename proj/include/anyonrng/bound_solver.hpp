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
#include <vector>

#include "anyonrng/moment_problem.hpp"
#include "anyonrng/sdp_solver.hpp"

namespace anyonrng {

struct BoundOptions {
  HierarchyLevel level = HierarchyLevel::One;
  SdpOptions sdp;
  unsigned threads = 1;
  /// Solve one representative per orbit of the MABK symmetry group instead
  /// of all 64 objective triples.
  bool symmetry_dedup = false;
};

struct TripleSolve {
  OutcomeTriple triple;
  SdpStatus status = SdpStatus::NumericalFailure;
  double value = 0.0;
  double upper_bound = 0.0;
  double gap = 0.0;
  int iterations = 0;
};

struct GuessingResult {
  double l_hat = 0.0;
  HierarchyLevel level = HierarchyLevel::One;
  /// Worst status over all solves (Infeasible if any solve is).
  SdpStatus status = SdpStatus::NumericalFailure;
  /// max over triples of the conservative optimum, clamped to [0, 1].
  double p_star = 0.0;
  OutcomeTriple argmax;
  double max_gap = 0.0;
  int solves = 0;
  /// One entry per triple, index 8 * xyz + abc. With deduplication the
  /// entry of a triple holds its orbit representative's solve.
  std::vector<TripleSolve> per_triple;

  bool usable() const {
    return status == SdpStatus::Optimal || status == SdpStatus::NearOptimal;
  }
};

/// max over all 8 x 8 (abc, xyz) of the relaxed max P(abc|xyz) at MABK
/// value l_hat.
GuessingResult guessing_probability(double l_hat, const BoundOptions& options);

/// -log2 p_star, 0 for l_hat < 2. Throws SolverError if the sweep does not
/// produce a usable optimum (e.g. l_hat > 4).
double f_of_l(double l_hat, const BoundOptions& options);

/// Orbits of the 64 triples (index 8 * xyz + abc) under party
/// permutations, input relabelings and setting-dependent outcome flips that
/// leave the MABK expression invariant.
std::vector<std::vector<int>> mabk_symmetry_orbits();

/// Pool-adjacent-violators fit: closest non-decreasing sequence in least
/// squares (equal weights).
std::vector<double> isotonic_nondecreasing(const std::vector<double>& values);

struct FCurvePoint {
  double l = 0.0;
  double f = 0.0;
  double f_raw = 0.0;
  double p_star = 1.0;
  OutcomeTriple argmax;
  SdpStatus status = SdpStatus::Optimal;
  double max_gap = 0.0;
  int solves = 0;
};

/// Sampled f(L) on [2, 4], non-decreasing, linearly interpolated.
struct FCurveTable {
  HierarchyLevel level = HierarchyLevel::One;
  double tolerance = 0.0;
  bool symmetry_dedup = false;
  std::vector<FCurvePoint> points;
  /// Largest |f - f_raw| introduced by the monotone cleanup.
  double max_isotonic_adjustment = 0.0;

  /// 0 below the first grid point, f(last) above the last, linear between.
  double evaluate(double l) const;

  /// Builds a table from (L, f) pairs (e.g. read from CSV), applying the
  /// same monotone cleanup. L must be strictly increasing.
  static FCurveTable from_pairs(const std::vector<std::pair<double, double>>& lf);
};

/// Equally spaced grid of `grid_points` values on [2, 4].
FCurveTable build_fcurve(int grid_points, const BoundOptions& options);

struct NoSignallingResult {
  NoSignallingScope scope = NoSignallingScope::MabkSettings;
  SdpStatus status = SdpStatus::NumericalFailure;
  double value = 0.0;
  OutcomeTriple argmax;
  /// P(abc|xyz) of the maximizing box, row 8 * s + abc over `settings`.
  std::vector<double> probabilities;
  std::vector<int> settings;
  double min_probability = 0.0;
};

/// LP max of P(abc|xyz) over no-signalling boxes with MABK value l_hat,
/// maximized over every modelled triple.
NoSignallingResult nosignalling_max(
    double l_hat, NoSignallingScope scope = NoSignallingScope::MabkSettings,
    const SdpOptions& options = {});

}  // namespace anyonrng
