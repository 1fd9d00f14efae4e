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

#include <random>

#include "anyonrng/toeplitz_extractor.hpp"

namespace anyonrng {
namespace {

Bits random_bits(std::size_t n, std::mt19937_64& gen) {
  Bits b(n);
  for (auto& x : b) x = gen() & 1;
  return b;
}

// Explicit m x n matrix product over GF(2).
Bits matrix_oracle(const Bits& x, const ToeplitzSeed& seed, std::size_t m) {
  const std::size_t n = x.size();
  Bits y(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    int acc = 0;
    for (std::size_t j = 0; j < n; ++j) acc ^= seed.bits[i - j + n - 1] & x[j];
    y[i] = static_cast<std::uint8_t>(acc);
  }
  return y;
}

TEST(Toeplitz, MatchesMatrixOracleOnAllSmallShapes) {
  std::mt19937_64 gen(3);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      for (int rep = 0; rep < 20; ++rep) {
        const Bits x = random_bits(n, gen);
        const auto seed = ToeplitzSeed::random(n, m, gen);
        ASSERT_EQ(extract(x, seed, m), matrix_oracle(x, seed, m)) << n << "x" << m;
      }
    }
  }
}

TEST(Toeplitz, MatchesOracleAcrossWordBoundaries) {
  std::mt19937_64 gen(4);
  for (std::size_t n : {63u, 64u, 65u, 130u, 257u}) {
    for (std::size_t m : {1u, 7u, 64u, 65u}) {
      if (m > n) continue;
      const Bits x = random_bits(n, gen);
      const auto seed = ToeplitzSeed::random(n, m, gen);
      ASSERT_EQ(extract(x, seed, m), matrix_oracle(x, seed, m)) << n << "x" << m;
    }
  }
}

TEST(ToeplitzProperty, LinearOverGf2) {
  std::mt19937_64 gen(5);
  for (int pair = 0; pair < 1000; ++pair) {
    const std::size_t n = 1 + gen() % 300;
    const std::size_t m = 1 + gen() % n;
    const auto seed = ToeplitzSeed::random(n, m, gen);
    const Bits a = random_bits(n, gen), b = random_bits(n, gen);
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = a[i] ^ b[i];
    const Bits ya = extract(a, seed, m), yb = extract(b, seed, m);
    const Bits ys = extract(s, seed, m);
    for (std::size_t i = 0; i < m; ++i) ASSERT_EQ(ys[i], ya[i] ^ yb[i]);
  }
}

TEST(Toeplitz, RejectsBadShapes) {
  std::mt19937_64 gen(6);
  const Bits x = random_bits(8, gen);
  const auto seed = ToeplitzSeed::random(8, 4, gen);
  EXPECT_THROW(extract(x, seed, 5), std::invalid_argument);
  EXPECT_THROW(extract(x, seed, 0), std::invalid_argument);
  EXPECT_THROW(extract(x, seed, 9), std::invalid_argument);
  Bits bad = x;
  bad[0] = 2;
  EXPECT_THROW(extract(bad, seed, 4), std::invalid_argument);
}

TEST(OutputLength, LeftoverHash) {
  EXPECT_EQ(output_length(100.0, 0.5), 98u);
  EXPECT_EQ(output_length(100.9, 1.0), 100u);
  EXPECT_EQ(output_length(10.0, 1e-6), 0u);
  EXPECT_THROW(output_length(10.0, 0.0), std::invalid_argument);
}

TEST(RawBits, InterleavesOutcomes) {
  const std::vector<TrialRecord> r{{{0, 0, 0}, 1, 0, 1}, {{0, 1, 1}, 0, 1, 1}};
  EXPECT_EQ(raw_bits_from_records(r), (Bits{1, 0, 1, 0, 1, 1}));
}

TEST(Hex, RoundTrip) {
  const Bits b{1, 0, 1, 1, 0, 0, 0, 1, 1};
  EXPECT_EQ(bits_to_hex(b), "b18");
  EXPECT_EQ(bits_from_hex("b18", 9), b);
  EXPECT_EQ(bits_to_hex({}), "");
  EXPECT_THROW(bits_from_hex("zz", 8), std::invalid_argument);
  EXPECT_EQ(pack_bytes(b), (std::vector<std::uint8_t>{0xb1, 0x80}));
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100; ++i) {
    const Bits x = random_bits(gen() % 70, gen);
    ASSERT_EQ(bits_from_hex(bits_to_hex(x), x.size()), x);
  }
}

}  // namespace
}  // namespace anyonrng
