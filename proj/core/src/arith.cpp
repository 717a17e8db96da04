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

#include "cyclosimplex/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cyclosimplex/error.hpp"

namespace cyclosimplex {

namespace {

constexpr std::uint64_t kSegmentCandidates = 1u << 16;
constexpr std::uint64_t kMaxSieveStep = 1u << 20;
constexpr std::uint64_t kMaxSieveHi = 1ull << 44;

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint32_t> small_primes_upto(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  return primes;
}

// Inverse of a mod p for small prime p, a != 0 mod p.
std::uint64_t small_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) a = std::exchange(b, a % b);
  return a;
}

Residue::Residue(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
  if (modulus < 2) {
    throw Error(Errc::BadParameters, "residue modulus must be >= 2")
        .with("modulus", std::to_string(modulus));
  }
  value_ = value % modulus;
}

Residue Residue::from_signed(std::int64_t value, std::uint64_t modulus) {
  if (modulus < 2) return Residue(0, modulus);  // throws
  return Residue(reduce_signed(value, modulus), modulus);
}

static void require_same_modulus(const Residue& a, const Residue& b) {
  if (a.modulus() != b.modulus()) {
    throw Error(Errc::BadParameters, "residues with different moduli");
  }
}

Residue operator+(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue(add_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue operator-(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue(sub_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue operator*(Residue a, Residue b) {
  require_same_modulus(a, b);
  return Residue(mul_mod(a.value_, b.value_, a.modulus_), a.modulus_);
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

Residue mod_pow(Residue base, std::uint64_t exp) {
  const std::uint64_t n = base.modulus();
  std::uint64_t result = 1 % n;
  std::uint64_t b = base.value();
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, b, n);
    b = mul_mod(b, b, n);
    exp >>= 1;
  }
  return Residue(result, n);
}

Residue mod_inv(Residue a) {
  const std::uint64_t n = a.modulus();
  // Extended Euclid in signed 128-bit so that n up to 2^64-1 is safe.
  __int128 t = 0, new_t = 1;
  __int128 r = n, new_r = a.value();
  while (new_r != 0) {
    const __int128 q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) {
    throw Error(Errc::NotInvertible, "value is not a unit modulo the modulus")
        .with("value", std::to_string(a.value()))
        .with("modulus", std::to_string(n));
  }
  if (t < 0) t += n;
  return Residue(static_cast<std::uint64_t>(t), n);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                               17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = mod_pow(Residue(a, n), d).value();
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeProgression::PrimeProgression(std::uint64_t lo, std::uint64_t hi, std::uint64_t step,
                                   std::uint64_t residue)
    : hi_(hi), step_(step), residue_(residue), cursor_(0) {
  if (step == 0 || residue >= step) {
    throw Error(Errc::BadParameters, "progression needs step >= 1 and 0 <= residue < step")
        .with("step", std::to_string(step))
        .with("residue", std::to_string(residue));
  }
  if (lo > hi) {
    done_ = true;
    return;
  }
  const std::uint64_t r = lo % step;
  const std::uint64_t delta = r <= residue ? residue - r : step - r + residue;
  if (delta > hi - lo) {
    done_ = true;
    return;
  }
  cursor_ = lo + delta;
  sieve_ = step <= kMaxSieveStep && hi <= kMaxSieveHi;
  if (sieve_) {
    base_primes_ = small_primes_upto(isqrt(hi));
  }
}

void PrimeProgression::fill_segment() {
  // Candidates cursor_ + i*step_, i in [0, count).
  const std::uint64_t remaining = (hi_ - cursor_) / step_ + 1;
  const std::uint64_t count = std::min(remaining, kSegmentCandidates);
  seg_lo_ = cursor_;
  seg_hi_ = cursor_ + (count - 1) * step_;
  composite_.assign(count, 0);

  for (std::uint64_t i = 0; i < count; ++i) {
    if (seg_lo_ + i * step_ >= 2) break;
    composite_[i] = 1;
  }
  for (std::uint32_t p : base_primes_) {
    if (static_cast<std::uint64_t>(p) * p > seg_hi_) break;
    const std::uint64_t first_mod = seg_lo_ % p;
    if (step_ % p == 0) {
      if (first_mod != 0) continue;
      for (std::uint64_t i = 0; i < count; ++i) {
        if (seg_lo_ + i * step_ != p) composite_[i] = 1;
      }
      continue;
    }
    // seg_lo + i*step == 0 (mod p)  <=>  i == -seg_lo * step^{-1} (mod p)
    const std::uint64_t inv = small_inverse(step_ % p, p);
    const std::uint64_t neg = (p - first_mod) % p;
    for (std::uint64_t i = neg * inv % p; i < count; i += p) {
      if (seg_lo_ + i * step_ != p) composite_[i] = 1;
    }
  }
}

std::optional<std::uint64_t> PrimeProgression::next_candidate() {
  if (done_) return std::nullopt;
  const std::uint64_t x = cursor_;
  if (hi_ - cursor_ < step_) {
    done_ = true;
  } else {
    cursor_ += step_;
  }
  return x;
}

std::optional<std::uint64_t> PrimeProgression::next() {
  if (!sieve_) {
    while (auto x = next_candidate()) {
      if (is_prime(*x)) return x;
    }
    return std::nullopt;
  }
  while (!done_) {
    if (composite_.empty() || cursor_ > seg_hi_) fill_segment();
    const std::uint64_t index = (cursor_ - seg_lo_) / step_;
    const bool prime = composite_[index] == 0;
    const auto x = next_candidate();
    if (prime) return x;
  }
  return std::nullopt;
}

std::vector<std::uint64_t> primes_in_progression(std::uint64_t lo, std::uint64_t hi,
                                                 std::uint64_t step, std::uint64_t residue) {
  PrimeProgression stream(lo, hi, step, residue);
  std::vector<std::uint64_t> out;
  while (auto p = stream.next()) out.push_back(*p);
  return out;
}

BigInt gcd_vec(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const BigInt& v : values) {
    g = boost::multiprecision::gcd(g, BigInt(abs(v)));
  }
  return g;
}

std::string to_decimal(const BigInt& x) { return x.str(); }

BigInt parse_bigint(const std::string& text) {
  if (text.empty()) throw Error(Errc::ParseError, "empty integer");
  std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
  if (i == text.size()) throw Error(Errc::ParseError, "bad integer '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw Error(Errc::ParseError, "bad integer '" + text + "'");
  }
  return BigInt(text);
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace cyclosimplex
