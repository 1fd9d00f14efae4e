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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "anyonrng/protocol.hpp"

namespace anyonrng {

/// Bits are stored one per byte (0 or 1) at the API boundary.
using Bits = std::vector<std::uint8_t>;

/// floor(min_entropy_bits - 2 log2(1/security)), or 0 if that is negative.
/// `security` must lie in (0, 1].
std::uint64_t output_length(double min_entropy_bits, double security);

/// Seed of the m x n Toeplitz matrix T[i][j] = bits[i - j + n - 1].
struct ToeplitzSeed {
  Bits bits;

  static std::size_t required_length(std::size_t n, std::size_t m) {
    return n + m - 1;
  }
  static ToeplitzSeed random(std::size_t n, std::size_t m, std::mt19937_64& rng);
};

/// y = T x over GF(2). Requires 1 <= m <= n and seed length n + m - 1.
Bits extract(std::span<const std::uint8_t> raw, const ToeplitzSeed& seed,
             std::size_t m);

/// a1 b1 c1 a2 b2 c2 ... (3k bits).
Bits raw_bits_from_records(std::span<const TrialRecord> records);

/// Hex with the first bit as the most significant bit of the first digit;
/// the tail is zero-padded to a whole digit.
std::string bits_to_hex(std::span<const std::uint8_t> bits);
/// Inverse of bits_to_hex for a known bit count.
Bits bits_from_hex(const std::string& hex, std::size_t bit_count);

/// Packs bits MSB-first into bytes for binary output.
std::vector<std::uint8_t> pack_bytes(std::span<const std::uint8_t> bits);

}  // namespace anyonrng
