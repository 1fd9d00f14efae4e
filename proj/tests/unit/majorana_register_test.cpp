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

#include <cmath>
#include <numbers>
#include <random>

#include "anyonrng/errors.hpp"
#include "anyonrng/majorana_register.hpp"
#include "support/oracles.hpp"

namespace anyonrng {
namespace {

using testing::majorana;
using testing::MatrixXcd;
using testing::to_vector;
using testing::VectorXcd;

constexpr int kModes = 8;

MajoranaRegister from(const VectorXcd& v, std::uint64_t seed = 1) {
  return MajoranaRegister::from_amplitudes(
      kModes, std::vector<Amplitude>(v.data(), v.data() + v.size()), seed);
}

VectorXcd random_vector(std::mt19937_64& rng) {
  const auto v = testing::random_state(1u << (kModes / 2), rng);
  return to_vector(v);
}

TEST(MajoranaRegister, SingleOperatorsMatchKroneckerOracle) {
  std::mt19937_64 rng(11);
  for (int j = 1; j <= kModes; ++j) {
    const VectorXcd psi = random_vector(rng);
    auto reg = from(psi);
    reg.apply_majorana(j);
    const VectorXcd want = majorana(kModes, j) * psi;
    EXPECT_LT((to_vector(reg.amplitudes()) - want).cwiseAbs().maxCoeff(), 1e-12)
        << "c_" << j;
  }
}

TEST(MajoranaRegister, OracleSatisfiesCliffordAlgebra) {
  for (int i = 1; i <= kModes; ++i) {
    for (int j = 1; j <= kModes; ++j) {
      const MatrixXcd ci = majorana(kModes, i);
      const MatrixXcd cj = majorana(kModes, j);
      const MatrixXcd anti = ci * cj + cj * ci;
      const MatrixXcd want =
          (i == j ? 2.0 : 0.0) * MatrixXcd::Identity(ci.rows(), ci.cols());
      EXPECT_LT((anti - want).cwiseAbs().maxCoeff(), 1e-14);
    }
  }
}

TEST(MajoranaRegister, StringCoefficientsMatchOracle) {
  const std::vector<int> modes{2, 5, 7, 3};
  const MajoranaString str(kModes, modes);
  MatrixXcd dense = MatrixXcd::Identity(16, 16);
  for (int m : modes) dense = dense * majorana(kModes, m);
  for (std::uint64_t s = 0; s < 16; ++s) {
    const std::uint64_t t = s ^ str.flip_mask();
    EXPECT_LT(std::abs(dense(t, s) - str.coefficient(s)), 1e-14);
  }
}

TEST(MajoranaRegister, BraidMatchesClosedForm) {
  std::mt19937_64 rng(12);
  const MatrixXcd id = MatrixXcd::Identity(16, 16);
  for (auto [j, k] : {std::pair{1, 2}, {2, 3}, {3, 6}, {8, 1}}) {
    const MatrixXcd cc = majorana(kModes, j) * majorana(kModes, k);
    const MatrixXcd ccw = (id - cc) / std::numbers::sqrt2;
    const MatrixXcd cw = (id + cc) / std::numbers::sqrt2;
    const VectorXcd psi = random_vector(rng);

    auto a = from(psi);
    a.apply_braid(j, k, BraidDirection::CounterClockwise);
    EXPECT_LT((to_vector(a.amplitudes()) - ccw * psi).cwiseAbs().maxCoeff(), 1e-12);

    auto b = from(psi);
    b.apply_braid(j, k, BraidDirection::Clockwise);
    EXPECT_LT((to_vector(b.amplitudes()) - cw * psi).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MajoranaRegister, PairExponential) {
  std::mt19937_64 rng(13);
  const MatrixXcd cc = majorana(kModes, 3) * majorana(kModes, 7);
  const double theta = 0.37;
  const MatrixXcd u =
      std::cos(theta) * MatrixXcd::Identity(16, 16) + std::sin(theta) * cc;
  const VectorXcd psi = random_vector(rng);
  auto reg = from(psi);
  reg.apply_pair_exponential(3, 7, theta);
  EXPECT_LT((to_vector(reg.amplitudes()) - u * psi).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MajoranaRegister, VacuumPairsAreInI) {
  const auto reg = MajoranaRegister::vacuum(kModes, 1);
  for (int k = 1; k < kModes; k += 2) {
    EXPECT_NEAR(reg.pair_probability(k, k + 1, FusionChannel::Vacuum), 1.0, 1e-15);
  }
  // (1,3) is maximally uncertain in the vacuum.
  EXPECT_NEAR(reg.pair_probability(1, 3, FusionChannel::Vacuum), 0.5, 1e-15);
}

TEST(MajoranaRegister, PairProbabilityIsBornRule) {
  std::mt19937_64 rng(14);
  const VectorXcd psi = random_vector(rng);
  const auto reg = from(psi);
  const MatrixXcd obs = Amplitude(0, -1) * majorana(kModes, 2) * majorana(kModes, 5);
  const MatrixXcd proj = 0.5 * (MatrixXcd::Identity(16, 16) + obs);
  const double want = (psi.adjoint() * proj * psi)(0, 0).real();
  EXPECT_NEAR(reg.pair_probability(2, 5, FusionChannel::Vacuum), want, 1e-12);
  EXPECT_NEAR(reg.pair_probability(2, 5, FusionChannel::Fermion), 1.0 - want, 1e-12);
}

TEST(MajoranaRegister, QuadProbabilityIsBornRule) {
  std::mt19937_64 rng(15);
  const VectorXcd psi = random_vector(rng);
  const auto reg = from(psi);
  const std::array<int, 4> modes{4, 3, 6, 8};
  MatrixXcd obs = MatrixXcd::Identity(16, 16);
  for (int m : modes) obs = obs * majorana(kModes, m);
  const MatrixXcd proj = 0.5 * (MatrixXcd::Identity(16, 16) + obs);
  const double want = (psi.adjoint() * proj * psi)(0, 0).real();
  EXPECT_NEAR(reg.quad_probability(modes, +1), want, 1e-12);
  EXPECT_NEAR(reg.quad_probability(modes, -1), 1.0 - want, 1e-12);
}

TEST(MajoranaRegister, ProjectionLeavesEigenstate) {
  std::mt19937_64 rng(16);
  auto reg = from(random_vector(rng));
  reg.project_pair(1, 4, FusionChannel::Fermion);
  EXPECT_NEAR(reg.pair_probability(1, 4, FusionChannel::Fermion), 1.0, 1e-12);
  EXPECT_NEAR(reg.norm(), 1.0, 1e-12);
  EXPECT_EQ(reg.measure_pair(1, 4).channel, FusionChannel::Fermion);
}

TEST(MajoranaRegister, ProjectingImpossibleBranchThrows) {
  auto reg = MajoranaRegister::vacuum(kModes, 1);
  EXPECT_THROW(reg.project_pair(1, 2, FusionChannel::Fermion), ProtocolError);
}

TEST(MajoranaRegister, MeasurementFrequenciesFollowBornRule) {
  // |+> on the pair (1,3): vacuum, then measure (1,3) repeatedly.
  int vacuum = 0;
  const int runs = 4000;
  for (int i = 0; i < runs; ++i) {
    auto reg = MajoranaRegister::vacuum(4, 1000 + i);
    vacuum += reg.measure_pair(1, 3).channel == FusionChannel::Vacuum;
  }
  const double sigma = std::sqrt(runs * 0.25);
  EXPECT_LT(std::abs(vacuum - runs / 2.0), 5 * sigma);
}

TEST(MajoranaRegister, RejectsBadModes) {
  EXPECT_THROW(MajoranaRegister::vacuum(7, 1), std::invalid_argument);
  auto reg = MajoranaRegister::vacuum(kModes, 1);
  EXPECT_THROW(reg.apply_braid(0, 2), std::out_of_range);
  EXPECT_THROW(reg.apply_braid(3, 3), std::invalid_argument);
  EXPECT_THROW(reg.apply_majorana(kModes + 1), std::out_of_range);
}

// Property: random braid/measurement sequences preserve the norm and the
// even total parity of the vacuum.
TEST(MajoranaRegisterProperty, RandomCircuitsPreserveNormAndParity) {
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    auto reg = MajoranaRegister::vacuum(kModes, gen());
    std::uniform_int_distribution<int> mode(1, kModes);
    std::uniform_int_distribution<int> kind(0, 3);
    for (int step = 0; step < 30; ++step) {
      int j = mode(gen), k = mode(gen);
      while (k == j) k = mode(gen);
      switch (kind(gen)) {
        case 0:
          reg.apply_braid(j, k, BraidDirection::CounterClockwise);
          break;
        case 1:
          reg.apply_braid(j, k, BraidDirection::Clockwise);
          break;
        case 2:
          reg.apply_pair_exponential(j, k, std::uniform_real_distribution<>(-3, 3)(gen));
          break;
        default:
          reg.measure_pair(j, k);
      }
    }
    ASSERT_NEAR(reg.norm(), 1.0, 1e-10);
    ASSERT_LT(reg.odd_parity_weight(), 1e-12);
  }
}

TEST(MajoranaRegisterProperty, BraidTwiceIsPairProduct) {
  // B^2 = -c_j c_k for the counterclockwise exchange.
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> mode(1, kModes);
    int j = mode(gen), k = mode(gen);
    while (k == j) k = mode(gen);
    const VectorXcd psi = random_vector(gen);
    auto reg = from(psi);
    reg.apply_braid(j, k);
    reg.apply_braid(j, k);
    const VectorXcd want = -(majorana(kModes, j) * majorana(kModes, k)) * psi;
    ASSERT_LT((to_vector(reg.amplitudes()) - want).cwiseAbs().maxCoeff(), 1e-12);
  }
}

}  // namespace
}  // namespace anyonrng
