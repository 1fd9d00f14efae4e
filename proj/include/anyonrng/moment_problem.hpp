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

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "anyonrng/sdp_solver.hpp"

namespace anyonrng {

/// Relaxation used for the guessing-probability problem.
///   One      : basis {1, A0, A1, B0, B1, C0, C1}, d = 7.
///   OneAB    : One plus every cross-party product (A_x B_y, ...), d = 19.
///   Two      : all monomials of degree <= 2, d = 25.
///   NoSignalling : no moment matrix, only the probability constraints.
/// Every level also imposes P(abc|xyz) >= 0 for all 64 entries.
enum class HierarchyLevel { One, OneAB, Two, NoSignalling };

/// Parses "1", "1+AB" or "2".
HierarchyLevel parse_level(const std::string& text);
std::string to_string(HierarchyLevel level);

/// Product of dichotomic (±1-valued) operators. Letter 2p + s is the
/// operator of party p (0 = A, 1 = B, 2 = C) for setting s.
using Word = std::vector<int>;

/// Normal form: letters sorted by party (operators of different parties
/// commute), then adjacent repeats removed (A_x^2 = 1).
Word canonical_word(const Word& w);
/// Key of the real moment <w>: the smaller of the normal forms of w and of
/// its reverse (real symmetric moment matrix).
Word moment_key(const Word& w);
/// "1", "A0", "A0B1C1", "A0A1", ...
std::string word_label(const Word& w);

/// Outcome abc and settings xyz, each encoded as 4 * first + 2 * second +
/// third bit.
struct OutcomeTriple {
  int abc = 0;
  int xyz = 0;
  friend bool operator==(const OutcomeTriple&, const OutcomeTriple&) = default;
};
std::string to_string(const OutcomeTriple& t);

/// const + Σ coefficients[v] y_v over the SDP variables.
struct AffineExpr {
  double constant = 0.0;
  std::vector<std::pair<int, double>> terms;
};

struct MomentProblem {
  HierarchyLevel level = HierarchyLevel::One;
  double l_target = 0.0;
  OutcomeTriple objective;

  std::vector<Word> basis;
  /// Distinct moments, index 0 is the identity.
  std::vector<Word> moments;
  /// gram[i][j] = index of <basis[i]^† basis[j]> in `moments`.
  std::vector<std::vector<int>> gram;
  /// Moments that appear only in the probability constraints (degree-3
  /// correlators at level One, everything for NoSignalling).
  std::vector<int> positivity_only;
  /// Each moment as an affine function of the SDP variables. The identity
  /// is the constant 1, and <A0 B0 C0> is eliminated through the MABK
  /// equality.
  std::vector<AffineExpr> moment_exprs;
  /// Setting triples whose probabilities are modelled, in block order.
  std::vector<int> settings;
  /// Block 0: moment matrix (absent for NoSignalling). Last block: the
  /// probabilities P(abc|xyz) as a diagonal block, row 8 * s + abc where
  /// xyz = settings[s].
  SdpProblem sdp;

  int matrix_dimension() const { return static_cast<int>(basis.size()); }
  int probability_block() const {
    return static_cast<int>(sdp.blocks.size()) - 1;
  }
  /// All moment values at the SDP point y.
  Eigen::VectorXd moment_values(const Eigen::VectorXd& y) const;
  /// Index of <w> in `moments`, or -1.
  int find_moment(const Word& w) const;
};

/// Builds max P(abc|xyz) subject to the relaxation at `level` and
/// Σ_S τ(xyz) <A_x B_y C_z> = l_target.
MomentProblem build_moment_problem(HierarchyLevel level, double l_target,
                                   const OutcomeTriple& objective);

/// Which setting triples a no-signalling box is defined on.
///   MabkSettings: only the four triples of the MABK expression, so the
///     constraints reduce to single-party marginals (32 probabilities).
///   AllSettings: all eight triples with every marginal independent of the
///     remote settings (64 probabilities).
enum class NoSignallingScope { MabkSettings, AllSettings };
std::string to_string(NoSignallingScope scope);
/// Setting triples (encoded 4x + 2y + z) modelled by `scope`.
std::vector<int> nosignalling_settings(NoSignallingScope scope);

/// LP: max P(abc|xyz) over no-signalling boxes with MABK value l_target.
/// The objective settings must lie in the chosen scope.
MomentProblem build_nosignalling_problem(double l_target,
                                         const OutcomeTriple& objective,
                                         NoSignallingScope scope);

/// P(abc|xyz) in terms of correlators:
/// (1/8) Σ_{T ⊆ {A,B,C}} (-1)^{Σ_T outcomes} <Π_T operators>.
/// Returns (word, coefficient) pairs, the identity word first.
std::vector<std::pair<Word, double>> probability_expansion(
    const OutcomeTriple& triple);

}  // namespace anyonrng
