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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anyonrng/logical_qubits.hpp"

namespace anyonrng {

/// Register state whose logical amplitudes are `logical` (length 2^n), with
/// every qubit at total charge 0 and the ancilla pair in I.
LogicalState prepare_logical(int n_qubits, std::span<const Amplitude> logical,
                             std::uint64_t seed = 0);

/// Columns are the logical images of |0...0>, ..., |1...1>. `leakage`
/// receives the largest probability mass outside the codespace.
Eigen::MatrixXcd logical_action(int n_qubits,
                                const std::function<void(LogicalState&)>& op,
                                double* leakage = nullptr);

/// min over φ of max |a - e^{iφ} b|, with φ taken from the largest entry of
/// b. `phase` receives e^{iφ}.
double matrix_deviation_up_to_phase(const Eigen::MatrixXcd& a,
                                    const Eigen::MatrixXcd& b,
                                    Amplitude* phase = nullptr);

struct GateCheck {
  std::string name;
  Eigen::MatrixXcd actual;
  Eigen::MatrixXcd expected;
  Amplitude phase{1.0, 0.0};
  double deviation = 0.0;
  double leakage = 0.0;

  bool passed(double tol = 1e-10) const {
    return deviation < tol && leakage < tol;
  }
};

/// B12 ≃ diag(1, i), B34 ≃ diag(1, i), B23 ≃ (1/√2)[[1, -i], [-i, 1]].
std::vector<GateCheck> braid_checks();
GateCheck hadamard_check();

struct CnotBranchCheck {
  CnotBranch branch;
  GateCheck gate;
  /// |U ψ - e^{iφ} CNOT ψ| on a fixed generic superposition; catches
  /// input-dependent branch weights that a column-by-column test misses.
  double superposition_deviation = 0.0;

  bool passed(double tol = 1e-10) const {
    return gate.passed(tol) && superposition_deviation < tol;
  }
};

/// Control qubit 0, target qubit 1, each (ζ, η) branch post-selected.
std::vector<CnotBranchCheck> cnot_branch_checks();

struct BranchFrequencyCheck {
  int runs = 0;
  /// Indexed by 2*(ζ<0) + (η<0).
  std::array<int, 4> counts{};
  /// Largest |count - runs/4| in units of sqrt(runs * 3/16).
  double max_sigma = 0.0;

  bool passed(double sigmas = 5.0) const { return max_sigma <= sigmas; }
};

/// Sampled CNOTs on |+>|0>, one fresh register per run.
BranchFrequencyCheck cnot_branch_frequencies(int runs, std::uint64_t seed);

struct GhzCheck {
  std::array<CnotBranch, 2> branches;
  double p000 = 0.0;
  double p111 = 0.0;
  double leakage = 0.0;
  /// Exact register expectations of the readout parity observable for the
  /// four MABK settings, in kMabkSettings order.
  std::array<double, 4> correlators{};
  double mabk = 0.0;

  bool passed(double tol = 1e-10) const;
};

GhzCheck ghz_check(std::uint64_t seed);

struct PhysicsReport {
  std::vector<GateCheck> braids;
  GateCheck hadamard;
  std::vector<CnotBranchCheck> cnot_branches;
  BranchFrequencyCheck frequencies;
  GhzCheck ghz;

  bool passed() const;
};

PhysicsReport run_physics_checks(int frequency_runs, std::uint64_t seed);

}  // namespace anyonrng
