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

#include "anyonrng/physics_checks.hpp"

namespace anyonrng {
namespace {

TEST(PhysicsChecks, BraidMatrices) {
  const auto checks = braid_checks();
  ASSERT_EQ(checks.size(), 3u);
  for (const auto& c : checks) EXPECT_TRUE(c.passed()) << c.name << " " << c.deviation;
}

TEST(PhysicsChecks, HadamardWord) { EXPECT_TRUE(hadamard_check().passed()); }

TEST(PhysicsChecks, CnotBranches) {
  const auto checks = cnot_branch_checks();
  ASSERT_EQ(checks.size(), 4u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed()) << c.gate.name;
    EXPECT_NEAR(std::abs(c.gate.phase), 1.0, 1e-12);
  }
}

TEST(PhysicsChecks, BranchFrequencies) {
  const auto f = cnot_branch_frequencies(2000, 9);
  EXPECT_EQ(f.counts[0] + f.counts[1] + f.counts[2] + f.counts[3], 2000);
  EXPECT_TRUE(f.passed());
}

TEST(PhysicsChecks, Ghz) {
  const auto g = ghz_check(4);
  EXPECT_TRUE(g.passed());
  EXPECT_NEAR(g.correlators[0], 1.0, 1e-12);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(g.correlators[i], -1.0, 1e-12);
}

TEST(PhysicsChecks, DeviationDetectsWrongGate) {
  Eigen::MatrixXcd x(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  z << 1, 0, 0, -1;
  EXPECT_GT(matrix_deviation_up_to_phase(x, z), 0.5);
  Amplitude phase;
  EXPECT_LT(matrix_deviation_up_to_phase(Amplitude(0, 1) * x, x, &phase), 1e-15);
  EXPECT_NEAR(phase.imag(), 1.0, 1e-15);
}

TEST(PhysicsChecks, PrepareLogicalRejectsWrongLength) {
  const std::vector<Amplitude> v(3);
  EXPECT_THROW(prepare_logical(2, v), std::invalid_argument);
}

}  // namespace
}  // namespace anyonrng
