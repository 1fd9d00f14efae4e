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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "anyonrng/errors.hpp"
#include "anyonrng/logical_qubits.hpp"
#include "anyonrng/physics_checks.hpp"
#include "support/oracles.hpp"

namespace anyonrng {
namespace {

using testing::kron;
using testing::MatrixXcd;
using testing::pauli;
using testing::VectorXcd;

MatrixXcd single_qubit(void (*braid)(LogicalState&, int, BraidDirection),
                       BraidDirection dir) {
  return logical_action(1, [&](LogicalState& s) { braid(s, 0, dir); });
}

double dev(const MatrixXcd& a, const MatrixXcd& b) {
  return matrix_deviation_up_to_phase(a, b);
}

TEST(QubitLayout, StandardLayout) {
  const auto layout = QubitLayout::standard(3);
  EXPECT_EQ(layout.mode_count(), 14);
  EXPECT_EQ(layout.qubit_modes[1], (std::array<int, 4>{5, 6, 7, 8}));
  EXPECT_EQ(layout.ancilla_modes, (std::array<int, 2>{13, 14}));
  EXPECT_NO_THROW(layout.validate());
}

TEST(QubitLayout, RejectsMisalignedPairs) {
  auto layout = QubitLayout::standard(2);
  layout.qubit_modes[0] = {2, 3, 4, 1};
  EXPECT_THROW(layout.validate(), std::invalid_argument);
  layout = QubitLayout::standard(2);
  layout.qubit_modes[1][0] = 1;
  EXPECT_THROW(layout.validate(), std::invalid_argument);
}

TEST(Encode, StartsInLogicalZeroWithZeroCharge) {
  const auto st = encode(3, 1);
  const auto amps = st.logical_amplitudes();
  EXPECT_NEAR(std::abs(amps[0]), 1.0, 1e-15);
  EXPECT_NEAR(st.codespace_leakage(), 0.0, 1e-15);
  for (int q = 0; q < 3; ++q) EXPECT_NEAR(st.qubit_charge(q), 1.0, 1e-15);
}

TEST(Braids, InverseUndoes) {
  for (auto braid : {&apply_b12, &apply_b23, &apply_b34}) {
    const auto m = logical_action(1, [&](LogicalState& s) {
      braid(s, 0, BraidDirection::CounterClockwise);
      braid(s, 0, BraidDirection::Clockwise);
    });
    EXPECT_LT(dev(m, MatrixXcd::Identity(2, 2)), 1e-12);
  }
}

TEST(Braids, SquaresArePaulis) {
  const auto ccw = BraidDirection::CounterClockwise;
  const auto b12 = single_qubit(&apply_b12, ccw);
  const auto b23 = single_qubit(&apply_b23, ccw);
  const auto b34 = single_qubit(&apply_b34, ccw);
  EXPECT_LT(dev(b12 * b12, pauli('Z')), 1e-12);
  EXPECT_LT(dev(b34 * b34, pauli('Z')), 1e-12);
  EXPECT_LT(dev(b23 * b23, pauli('X')), 1e-12);
  // B12 and B34 act identically on the codespace.
  EXPECT_LT(dev(b12, b34), 1e-12);
}

TEST(Braids, StayInCodespaceWithChargeZero) {
  std::mt19937_64 rng(3);
  auto st = prepare_logical(2, testing::random_state(4, rng));
  for (int i = 0; i < 20; ++i) {
    const int q = i % 2;
    switch (rng() % 3) {
      case 0: apply_b12(st, q); break;
      case 1: apply_b23(st, q); break;
      default: apply_b34(st, q);
    }
  }
  EXPECT_LT(st.codespace_leakage(), 1e-12);
  EXPECT_NEAR(st.qubit_charge(0), 1.0, 1e-12);
  EXPECT_NEAR(st.qubit_charge(1), 1.0, 1e-12);
}

TEST(Braids, ActOnTheAddressedQubitOnly) {
  const auto b23 = single_qubit(&apply_b23, BraidDirection::CounterClockwise);
  const auto two = logical_action(2, [](LogicalState& s) { apply_b23(s, 1); });
  EXPECT_LT(dev(two, kron(MatrixXcd::Identity(2, 2), b23)), 1e-12);
  const auto first = logical_action(2, [](LogicalState& s) { apply_b23(s, 0); });
  EXPECT_LT(dev(first, kron(b23, MatrixXcd::Identity(2, 2))), 1e-12);
}

TEST(Hadamard, IsInvolutionAndConjugatesXToZ) {
  const auto h = logical_action(1, [](LogicalState& s) { apply_hadamard(s, 0); });
  EXPECT_LT(dev(h * h, MatrixXcd::Identity(2, 2)), 1e-12);
  EXPECT_LT(dev(h * pauli('X') * h, pauli('Z')), 1e-12);
}

TEST(LogicalPauli, MatchesPaulis) {
  for (auto [p, c] : {std::pair{LogicalPauli::X, 'X'},
                      {LogicalPauli::Y, 'Y'},
                      {LogicalPauli::Z, 'Z'},
                      {LogicalPauli::I, 'I'}}) {
    const auto m = logical_action(
        1, [p = p](LogicalState& s) { apply_logical_pauli(s, 0, p); });
    EXPECT_LT(dev(m, pauli(c)), 1e-12) << c;
  }
}

TEST(Cnot, SampledBranchesGiveCnotOnEveryBasisInput) {
  MatrixXcd cnot = MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::vector<Amplitude> in(4);
    in[seed % 4] = 1.0;
    auto st = prepare_logical(2, in, seed);
    apply_cnot(st, 0, 1);
    const auto out = st.logical_amplitudes();
    const VectorXcd want = cnot.col(seed % 4);
    EXPECT_LT(max_deviation_up_to_phase(out, {want.data(), 4}), 1e-12);
    EXPECT_NEAR(st.reg().pair_probability(9, 10, FusionChannel::Vacuum), 1.0,
                1e-12);
  }
}

TEST(Cnot, ReversedControlAndTarget) {
  MatrixXcd cnot = MatrixXcd::Zero(4, 4);
  cnot(0, 0) = cnot(2, 2) = cnot(1, 3) = cnot(3, 1) = 1.0;
  const auto m = logical_action(
      2, [](LogicalState& s) { apply_cnot(s, 1, 0, CnotBranch{-1, +1}); });
  EXPECT_LT(dev(m, cnot), 1e-12);
}

TEST(Cnot, ControlledZOnEveryBranch) {
  MatrixXcd cz = MatrixXcd::Identity(4, 4);
  cz(3, 3) = -1.0;
  for (int zeta : {1, -1}) {
    for (int eta : {1, -1}) {
      const auto m = logical_action(2, [&](LogicalState& s) {
        apply_controlled_z(s, 0, 1, CnotBranch{zeta, eta});
      });
      EXPECT_LT(dev(m, cz), 1e-12) << zeta << eta;
    }
  }
}

TEST(Cnot, AncillaInFermionChannelIsRejected) {
  auto st = encode(2, 1);
  std::vector<Amplitude> amps(st.reg().dimension());
  amps[std::uint64_t{1} << 4] = 1.0;  // modes 9, 10 occupied
  LogicalState bad(MajoranaRegister::from_amplitudes(10, amps, 1), st.layout());
  EXPECT_THROW(apply_cnot(bad, 0, 1), ProtocolError);
}

TEST(Cnot, RejectsSameQubit) {
  auto st = encode(2, 1);
  EXPECT_THROW(apply_cnot(st, 1, 1), std::invalid_argument);
  EXPECT_THROW(apply_cnot(st, 0, 2), std::out_of_range);
}

TEST(Ghz, MatchesOracleUpToPhase) {
  for (std::uint64_t seed = 0; seed < 16; ++seed) {
    const auto prep = prepare_ghz(seed);
    const VectorXcd ghz = testing::ThreeQubits::ghz();
    EXPECT_LT(max_deviation_up_to_phase(prep.state.logical_amplitudes(),
                                        {ghz.data(), 8}),
              1e-12);
    EXPECT_LT(prep.state.codespace_leakage(), 1e-12);
  }
}

TEST(Readout, GhzParitiesAreDeterministic) {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    for (auto [x, y, z] : {std::array{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) {
      auto prep = prepare_ghz(seed * 7 + x + 2 * y);
      const int a = readout(prep.state, 0, x);
      const int b = readout(prep.state, 1, y);
      const int c = readout(prep.state, 2, z);
      const int want = (x + y + z == 0) ? 0 : 1;
      ASSERT_EQ((a + b + c) % 2, want);
    }
  }
}

TEST(Readout, MeasuresSigmaXAndSigmaY) {
  // |+> gives a = 0 for setting 0; |+i> gives a = 0 for setting 1.
  const double s = 1.0 / std::numbers::sqrt2;
  const std::vector<Amplitude> plus{s, s}, plus_i{s, Amplitude(0, s)};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto a = prepare_logical(1, plus, seed);
    EXPECT_EQ(readout(a, 0, 0), 0);
    auto b = prepare_logical(1, plus_i, seed);
    EXPECT_EQ(readout(b, 0, 1), 0);
  }
  auto st = encode(1, 1);
  EXPECT_THROW(readout(st, 0, 2), std::invalid_argument);
}

TEST(MaxDeviation, IgnoresGlobalPhase) {
  const std::vector<Amplitude> a{{0, 1}, {0, 0}}, b{{1, 0}, {0, 0}};
  EXPECT_LT(max_deviation_up_to_phase(a, b), 1e-15);
  const std::vector<Amplitude> c{{1, 0}, {1, 0}}, d{{1, 0}, {-1, 0}};
  EXPECT_NEAR(max_deviation_up_to_phase(c, d), 2.0, 1e-15);
}

}  // namespace
}  // namespace anyonrng
