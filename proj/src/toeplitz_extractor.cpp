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

#include "anyonrng/toeplitz_extractor.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace anyonrng {
namespace {

using Words = std::vector<std::uint64_t>;

Words pack_words(std::span<const std::uint8_t> bits) {
  Words out((bits.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("bit values must be 0 or 1");
    if (bits[i]) out[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  return out;
}

// 64 bits of `words` starting at bit `pos` (zero beyond the end).
std::uint64_t window(const Words& words, std::size_t pos) {
  const std::size_t w = pos / 64;
  const unsigned shift = pos % 64;
  std::uint64_t lo = w < words.size() ? words[w] : 0;
  if (shift == 0) return lo;
  const std::uint64_t hi = w + 1 < words.size() ? words[w + 1] : 0;
  return (lo >> shift) | (hi << (64 - shift));
}

}  // namespace

std::uint64_t output_length(double min_entropy_bits, double security) {
  if (!(security > 0.0 && security <= 1.0)) {
    throw std::invalid_argument("extractor security must be in (0, 1]");
  }
  const double m = std::floor(min_entropy_bits - 2.0 * std::log2(1.0 / security));
  return m > 0.0 ? static_cast<std::uint64_t>(m) : 0;
}

ToeplitzSeed ToeplitzSeed::random(std::size_t n, std::size_t m,
                                  std::mt19937_64& rng) {
  ToeplitzSeed seed;
  seed.bits.resize(required_length(n, m));
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < seed.bits.size(); ++i) {
    if (i % 64 == 0) word = rng();
    seed.bits[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1);
  }
  return seed;
}

Bits extract(std::span<const std::uint8_t> raw, const ToeplitzSeed& seed,
             std::size_t m) {
  const std::size_t n = raw.size();
  if (m == 0 || m > n) throw std::invalid_argument("need 1 <= m <= n");
  if (seed.bits.size() != ToeplitzSeed::required_length(n, m)) {
    throw std::invalid_argument("Toeplitz seed has length " +
                                std::to_string(seed.bits.size()) + ", need " +
                                std::to_string(ToeplitzSeed::required_length(n, m)));
  }
  // y_i = Σ_j seed[i - j + n - 1] x_j = Σ_t seed[i + t] x_{n-1-t}.
  Bits reversed(raw.rbegin(), raw.rend());
  const Words x = pack_words(reversed);
  const Words s = pack_words(seed.bits);
  Bits out(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < x.size(); ++w) {
      acc ^= window(s, i + 64 * w) & x[w];
    }
    out[i] = static_cast<std::uint8_t>(std::popcount(acc) & 1);
  }
  return out;
}

Bits raw_bits_from_records(std::span<const TrialRecord> records) {
  Bits out;
  out.reserve(3 * records.size());
  for (const auto& r : records) {
    out.push_back(static_cast<std::uint8_t>(r.a));
    out.push_back(static_cast<std::uint8_t>(r.b));
    out.push_back(static_cast<std::uint8_t>(r.c));
  }
  return out;
}

std::string bits_to_hex(std::span<const std::uint8_t> bits) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve((bits.size() + 3) / 4);
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    int nibble = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      nibble <<= 1;
      if (i + j < bits.size() && bits[i + j]) nibble |= 1;
    }
    out.push_back(kDigits[nibble]);
  }
  return out;
}

Bits bits_from_hex(const std::string& hex, std::size_t bit_count) {
  if (hex.size() != (bit_count + 3) / 4) {
    throw std::invalid_argument("hex string length does not match bit count");
  }
  Bits out;
  out.reserve(bit_count);
  for (char ch : hex) {
    int v;
    if (ch >= '0' && ch <= '9') {
      v = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      v = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      v = ch - 'A' + 10;
    } else {
      throw std::invalid_argument("invalid hex digit");
    }
    for (int j = 3; j >= 0 && out.size() < bit_count; --j) {
      out.push_back(static_cast<std::uint8_t>((v >> j) & 1));
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_bytes(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> out((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
  }
  return out;
}

}  // namespace anyonrng
