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
#include <optional>
#include <span>
#include <vector>

#include "anyonrng/majorana_register.hpp"

namespace anyonrng {

/// Placement of logical qubits on Majorana modes. Qubit q (0-based) owns the
/// four modes (4q+1, ..., 4q+4) in the standard layout; the ancilla pair used
/// by the measurement-assisted CNOT sits after the last qubit.
struct QubitLayout {
  std::vector<std::array<int, 4>> qubit_modes;
  std::array<int, 2> ancilla_modes{};

  static QubitLayout standard(int n_qubits);

  int qubit_count() const { return static_cast<int>(qubit_modes.size()); }
  int mode_count() const { return 4 * qubit_count() + 2; }

  /// Distinct modes, 4n + 2 in total, and every (m1,m2), (m3,m4) and
  /// ancilla pair aligned to one Jordan-Wigner fermion (2k-1, 2k).
  void validate() const;
};

/// Four-quasiparticle encoding: |0> = ((••)_I (••)_I)_I, |1> = ((••)_ψ (••)_ψ)_I.
class LogicalState {
 public:
  LogicalState(MajoranaRegister reg, QubitLayout layout);

  const MajoranaRegister& reg() const { return reg_; }
  MajoranaRegister& reg() { return reg_; }
  const QubitLayout& layout() const { return layout_; }
  int qubit_count() const { return layout_.qubit_count(); }

  /// Amplitudes on the 2^n logical basis states with the ancilla pair in I.
  /// Qubit 0 is the most significant bit of the index.
  std::vector<Amplitude> logical_amplitudes() const;

  /// Probability mass outside the logical codespace.
  double codespace_leakage() const;

  /// <(-i c1 c2)(-i c3 c4)> over the qubit's four modes; +1 means total
  /// topological charge 0.
  double qubit_charge(int qubit) const;

  /// Index in the register's amplitude vector of a logical basis state.
  std::uint64_t register_index(std::uint64_t logical_index) const;

 private:
  MajoranaRegister reg_;
  QubitLayout layout_;
};

enum class LogicalPauli { I, X, Y, Z };

/// Outcomes of the two fusion measurements inside one CNOT: ζ from the quad
/// c4 c3 c6 c9, η from the pair -i c5 c9 (labels of the two-qubit gadget).
struct CnotBranch {
  int zeta = +1;
  int eta = +1;
  friend bool operator==(const CnotBranch&, const CnotBranch&) = default;
};

/// Logical |0...0> with the ancilla pair fused to I. For n = 3 the register
/// holds 14 modes.
LogicalState encode(int n_qubits, std::uint64_t seed);

void apply_b12(LogicalState& state, int qubit,
               BraidDirection direction = BraidDirection::CounterClockwise);
void apply_b23(LogicalState& state, int qubit,
               BraidDirection direction = BraidDirection::CounterClockwise);
void apply_b34(LogicalState& state, int qubit,
               BraidDirection direction = BraidDirection::CounterClockwise);

/// H ≃ B23^2 B12^-1 B23 B12^-1 B23^2, executed braid by braid.
void apply_hadamard(LogicalState& state, int qubit);

/// X ≃ B23^2, Z ≃ B12^2, Y ≃ X Z. Global phases dropped.
void apply_logical_pauli(LogicalState& state, int qubit, LogicalPauli pauli);

/// Controlled phase flip through braids and two fusion measurements. When
/// `forced` is set the measurement branch is post-selected instead of
/// sampled. Throws ProtocolError if the ancilla pair is not in I.
CnotBranch apply_controlled_z(LogicalState& state, int control, int target,
                              std::optional<CnotBranch> forced = std::nullopt);

/// CNOT = (1 ⊗ H) Λ(σz) (1 ⊗ H).
CnotBranch apply_cnot(LogicalState& state, int control, int target,
                      std::optional<CnotBranch> forced = std::nullopt);

struct GhzPreparation {
  LogicalState state;
  std::array<CnotBranch, 2> branches;
};

/// H on qubit 0, then CNOT(0,1) and CNOT(1,2): (|000> + |111>)/√2.
GhzPreparation prepare_ghz(std::uint64_t seed);

/// Setting 0 rotates with H, setting 1 with B23, then fuses the qubit's
/// first two modes. Returns 0 for I and 1 for ψ, i.e. the bit a of the
/// eigenvalue (-1)^a of σx (setting 0) or σy (setting 1).
int readout(LogicalState& state, int qubit, int setting);

/// max_i |a_i - e^{iφ} b_i| with φ fixed by the first entry of b whose
/// magnitude exceeds 1e-9.
double max_deviation_up_to_phase(std::span<const Amplitude> a,
                                 std::span<const Amplitude> b);

}  // namespace anyonrng
