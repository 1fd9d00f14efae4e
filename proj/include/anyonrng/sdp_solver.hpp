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
#include <algorithm>
#include <string>
#include <vector>

namespace anyonrng {

/// One block of a block-diagonal symmetric matrix. Diagonal blocks model
/// linear inequalities (an LP cone) and are stored as vectors.
struct SdpBlockSpec {
  int size = 0;
  bool diagonal = false;
};

/// Entry (row, col) of one block, row <= col. Off-diagonal entries stand
/// for both (row, col) and (col, row).
struct SdpEntry {
  int block = 0;
  int row = 0;
  int col = 0;
  double value = 0.0;
};

/// Standard dual pair over a block-diagonal cone:
///   (D) maximize b^T y  subject to  Z = C - Σ_i y_i A_i ⪰ 0,
///   (P) minimize C • X  subject to  A_i • X = b_i, X ⪰ 0.
/// Moment relaxations are written in form (D): y are the free moments and
/// Z is the moment matrix together with the linear inequality block.
struct SdpProblem {
  std::vector<SdpBlockSpec> blocks;
  std::vector<SdpEntry> c;
  std::vector<std::vector<SdpEntry>> a;
  Eigen::VectorXd b;
  /// Added to both objective values; keeps affine objectives exact.
  double objective_offset = 0.0;

  int variable_count() const { return static_cast<int>(a.size()); }
  /// Throws std::invalid_argument for out-of-range or misplaced entries.
  void validate() const;
};

struct SdpOptions {
  double tolerance = 1e-7;
  int max_iterations = 200;
};

/// NearOptimal: progress stalled (typically a feasible set without interior
/// points) with gap and residuals below sqrt(tolerance).
enum class SdpStatus {
  Optimal,
  NearOptimal,
  Infeasible,
  Unbounded,
  MaxIterations,
  NumericalFailure
};

std::string to_string(SdpStatus status);

/// Block-diagonal value: dense blocks as matrices, diagonal blocks as
/// column vectors.
using BlockValue = std::vector<Eigen::MatrixXd>;

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalFailure;
  /// Dual objective b^T y + offset, the value of the maximization.
  double value = 0.0;
  /// Primal objective C • X + offset. Upper bound on the maximum when the
  /// primal residual is small.
  double primal_value = 0.0;
  double gap = 0.0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  int iterations = 0;
  Eigen::VectorXd y;
  /// Z = C - Σ y_i A_i (the moment matrix for moment relaxations).
  BlockValue z;
  /// X, the dual certificate of the maximization.
  BlockValue x;

  /// max(value, primal_value): the conservative reading of the optimum.
  double upper_bound() const { return std::max(value, primal_value); }
  bool usable() const {
    return status == SdpStatus::Optimal || status == SdpStatus::NearOptimal;
  }
};

/// Infeasible-start primal-dual interior point method with the HKM search
/// direction and Mehrotra predictor-corrector steps. Dense linear algebra.
SdpSolution solve_sdp(const SdpProblem& problem, const SdpOptions& options = {});

}  // namespace anyonrng
