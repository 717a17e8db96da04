// Copyright 2026 The cyclosimplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact integer foundations: word-sized modular arithmetic, deterministic
// primality, prime streams in arithmetic progressions, and the
// arbitrary-precision types used for circulant volumes and continuants.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclosimplex {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// a*b mod n without overflow (128-bit widening).
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  // a, b < n
  return a >= n - b ? a - (n - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return a >= b ? a - b : a + (n - b);
}

/// Reduces a signed value into [0, n).
inline std::uint64_t reduce_signed(std::int64_t x, std::uint64_t n) {
  if (x >= 0) return static_cast<std::uint64_t>(x) % n;
  const std::uint64_t r = (static_cast<std::uint64_t>(-(x + 1)) + 1) % n;
  return r == 0 ? 0 : n - r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// A residue class modulo a word-sized modulus >= 2. value() < modulus() always.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  static Residue from_signed(std::int64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  friend bool operator==(const Residue&, const Residue&) = default;

  friend Residue operator+(Residue a, Residue b);
  friend Residue operator-(Residue a, Residue b);
  friend Residue operator*(Residue a, Residue b);
  Residue operator-() const;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

Residue mod_pow(Residue base, std::uint64_t exp);

/// Throws Error{NotInvertible} when gcd(a, modulus) != 1.
Residue mod_inv(Residue a);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Primes p in [lo, hi] with p == residue (mod step), in increasing order,
/// produced lazily. Dense progressions are sieved segment by segment; sparse
/// ones (large step, or hi beyond the sieving range) are tested candidate by
/// candidate with is_prime.
class PrimeProgression {
 public:
  PrimeProgression(std::uint64_t lo, std::uint64_t hi, std::uint64_t step, std::uint64_t residue);

  std::optional<std::uint64_t> next();

  bool sieving() const noexcept { return sieve_; }

 private:
  void fill_segment();
  std::optional<std::uint64_t> next_candidate();

  std::uint64_t hi_;
  std::uint64_t step_;
  std::uint64_t residue_;
  std::uint64_t cursor_;  // next candidate (== residue mod step)
  bool done_ = false;
  bool sieve_ = false;

  std::vector<std::uint32_t> base_primes_;
  std::uint64_t seg_lo_ = 0;
  std::uint64_t seg_hi_ = 0;  // inclusive
  std::vector<std::uint8_t> composite_;
};

std::vector<std::uint64_t> primes_in_progression(std::uint64_t lo, std::uint64_t hi,
                                                 std::uint64_t step, std::uint64_t residue);

/// gcd of absolute values; an all-zero (or empty) list gives 0.
BigInt gcd_vec(std::span<const BigInt> values);

std::string to_decimal(const BigInt& x);
BigInt parse_bigint(const std::string& text);

BigInt binomial(unsigned n, unsigned k);

}  // namespace cyclosimplex
