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

#include "anyonrng/logical_qubits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>

#include "anyonrng/errors.hpp"

namespace anyonrng {
namespace {

int fermion_bit(int first_mode_of_pair) { return (first_mode_of_pair - 1) / 2; }

bool aligned_pair(int a, int b) { return a % 2 == 1 && b == a + 1; }

void check_qubit(const LogicalState& state, int qubit) {
  if (qubit < 0 || qubit >= state.qubit_count()) {
    throw std::out_of_range("logical qubit " + std::to_string(qubit) +
                            " out of range");
  }
}

}  // namespace

QubitLayout QubitLayout::standard(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  QubitLayout layout;
  for (int q = 0; q < n_qubits; ++q) {
    layout.qubit_modes.push_back({4 * q + 1, 4 * q + 2, 4 * q + 3, 4 * q + 4});
  }
  layout.ancilla_modes = {4 * n_qubits + 1, 4 * n_qubits + 2};
  return layout;
}

void QubitLayout::validate() const {
  std::set<int> seen;
  auto take = [&](int m) {
    if (m < 1 || m > mode_count() || !seen.insert(m).second) {
      throw std::invalid_argument("invalid or repeated mode in qubit layout");
    }
  };
  for (const auto& q : qubit_modes) {
    for (int m : q) take(m);
    if (!aligned_pair(q[0], q[1]) || !aligned_pair(q[2], q[3])) {
      throw std::invalid_argument("qubit pairs must be (2k-1, 2k) modes");
    }
  }
  take(ancilla_modes[0]);
  take(ancilla_modes[1]);
  if (!aligned_pair(ancilla_modes[0], ancilla_modes[1])) {
    throw std::invalid_argument("ancilla pair must be (2k-1, 2k) modes");
  }
}

LogicalState::LogicalState(MajoranaRegister reg, QubitLayout layout)
    : reg_(std::move(reg)), layout_(std::move(layout)) {
  layout_.validate();
  if (reg_.mode_count() != layout_.mode_count()) {
    throw std::invalid_argument("register does not match qubit layout");
  }
}

std::uint64_t LogicalState::register_index(std::uint64_t logical_index) const {
  const int n = qubit_count();
  std::uint64_t index = 0;
  for (int q = 0; q < n; ++q) {
    if ((logical_index >> (n - 1 - q)) & 1) {
      const auto& m = layout_.qubit_modes[q];
      index |= std::uint64_t{1} << fermion_bit(m[0]);
      index |= std::uint64_t{1} << fermion_bit(m[2]);
    }
  }
  return index;
}

std::vector<Amplitude> LogicalState::logical_amplitudes() const {
  const std::uint64_t dim = std::uint64_t{1} << qubit_count();
  std::vector<Amplitude> out(dim);
  const auto amps = reg_.amplitudes();
  for (std::uint64_t b = 0; b < dim; ++b) out[b] = amps[register_index(b)];
  return out;
}

double LogicalState::codespace_leakage() const {
  double inside = 0.0;
  for (const auto& a : logical_amplitudes()) inside += std::norm(a);
  return std::max(0.0, 1.0 - inside);
}

double LogicalState::qubit_charge(int qubit) const {
  check_qubit(*this, qubit);
  const auto& m = layout_.qubit_modes[qubit];
  // (-i c1 c2)(-i c3 c4) = -c1 c2 c3 c4
  const MajoranaObservable charge(
      MajoranaString(reg_.mode_count(), {m[0], m[1], m[2], m[3]}), -1.0);
  return reg_.expectation(charge);
}

LogicalState encode(int n_qubits, std::uint64_t seed) {
  auto layout = QubitLayout::standard(n_qubits);
  const int modes = layout.mode_count();
  return LogicalState(MajoranaRegister::vacuum(modes, seed), std::move(layout));
}

void apply_b12(LogicalState& state, int qubit, BraidDirection direction) {
  check_qubit(state, qubit);
  const auto& m = state.layout().qubit_modes[qubit];
  state.reg().apply_braid(m[0], m[1], direction);
}

void apply_b23(LogicalState& state, int qubit, BraidDirection direction) {
  check_qubit(state, qubit);
  const auto& m = state.layout().qubit_modes[qubit];
  state.reg().apply_braid(m[1], m[2], direction);
}

void apply_b34(LogicalState& state, int qubit, BraidDirection direction) {
  check_qubit(state, qubit);
  const auto& m = state.layout().qubit_modes[qubit];
  state.reg().apply_braid(m[2], m[3], direction);
}

void apply_hadamard(LogicalState& state, int qubit) {
  constexpr auto ccw = BraidDirection::CounterClockwise;
  constexpr auto cw = BraidDirection::Clockwise;
  // Rightmost factor first; the word is a palindrome.
  apply_b23(state, qubit, ccw);
  apply_b23(state, qubit, ccw);
  apply_b12(state, qubit, cw);
  apply_b23(state, qubit, ccw);
  apply_b12(state, qubit, cw);
  apply_b23(state, qubit, ccw);
  apply_b23(state, qubit, ccw);
}

void apply_logical_pauli(LogicalState& state, int qubit, LogicalPauli pauli) {
  switch (pauli) {
    case LogicalPauli::I:
      check_qubit(state, qubit);
      return;
    case LogicalPauli::X:
      apply_b23(state, qubit);
      apply_b23(state, qubit);
      return;
    case LogicalPauli::Z:
      apply_b12(state, qubit);
      apply_b12(state, qubit);
      return;
    case LogicalPauli::Y:
      apply_logical_pauli(state, qubit, LogicalPauli::Z);
      apply_logical_pauli(state, qubit, LogicalPauli::X);
      return;
  }
}

CnotBranch apply_controlled_z(LogicalState& state, int control, int target,
                              std::optional<CnotBranch> forced) {
  check_qubit(state, control);
  check_qubit(state, target);
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  // Gadget labels c1..c4 = control block, c5..c8 = target block,
  // c9, c10 = ancilla pair.
  const auto& ctl = state.layout().qubit_modes[control];
  const auto& tgt = state.layout().qubit_modes[target];
  const int c3 = ctl[2], c4 = ctl[3];
  const int c5 = tgt[0], c6 = tgt[1];
  const int c9 = state.layout().ancilla_modes[0];
  const int c10 = state.layout().ancilla_modes[1];
  auto& reg = state.reg();

  if (reg.pair_probability(c9, c10, FusionChannel::Vacuum) < 1.0 - 1e-12) {
    throw ProtocolError("CNOT ancilla pair is not in the vacuum channel");
  }

  // exp((iπ/4) c4 c3 c5 c6) by measurement: ζ first, then η.
  CnotBranch branch;
  const std::array<int, 4> quad{c4, c3, c6, c9};
  if (forced) {
    reg.project_quad(quad, forced->zeta);
    reg.project_pair(c5, c9, FusionOutcome::from_sign(forced->eta).channel);
    branch = *forced;
  } else {
    branch.zeta = reg.measure_quad(quad);
    branch.eta = reg.measure_pair(c5, c9).sign();
  }

  constexpr double quarter = std::numbers::pi / 4;
  constexpr double half = std::numbers::pi / 2;
  // U_{ηζ}; the factor i on U_{+-} and U_{-+} is a global phase.
  if (branch.eta == branch.zeta) {
    reg.apply_pair_exponential(c5, c10, branch.eta > 0 ? quarter : -quarter);
  } else {
    reg.apply_pair_exponential(c5, c10, branch.eta > 0 ? quarter : -quarter);
    reg.apply_pair_exponential(c5, c6, half);
    reg.apply_pair_exponential(c4, c3, half);
  }

  reg.apply_pair_exponential(c5, c6, -quarter);
  reg.apply_pair_exponential(c3, c4, -quarter);

  if (reg.measure_pair(c9, c10).channel != FusionChannel::Vacuum) {
    throw ProtocolError("CNOT left the ancilla pair in the fermion channel");
  }
  return branch;
}

CnotBranch apply_cnot(LogicalState& state, int control, int target,
                      std::optional<CnotBranch> forced) {
  apply_hadamard(state, target);
  const CnotBranch branch = apply_controlled_z(state, control, target, forced);
  apply_hadamard(state, target);
  return branch;
}

GhzPreparation prepare_ghz(std::uint64_t seed) {
  LogicalState state = encode(3, seed);
  apply_hadamard(state, 0);
  const CnotBranch first = apply_cnot(state, 0, 1);
  const CnotBranch second = apply_cnot(state, 1, 2);
  return {std::move(state), {first, second}};
}

int readout(LogicalState& state, int qubit, int setting) {
  if (setting == 0) {
    apply_hadamard(state, qubit);
  } else if (setting == 1) {
    apply_b23(state, qubit);
  } else {
    throw std::invalid_argument("measurement setting must be 0 or 1");
  }
  const auto& m = state.layout().qubit_modes[qubit];
  return state.reg().measure_pair(m[0], m[1]).channel == FusionChannel::Vacuum
             ? 0
             : 1;
}

double max_deviation_up_to_phase(std::span<const Amplitude> a,
                                 std::span<const Amplitude> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("vectors differ in length");
  }
  Amplitude phase{1.0, 0.0};
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (std::abs(b[i]) > 1e-9) {
      const Amplitude ratio = a[i] / b[i];
      phase = std::abs(ratio) > 0 ? ratio / std::abs(ratio) : Amplitude{1.0};
      break;
    }
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  }
  return worst;
}

}  // namespace anyonrng
